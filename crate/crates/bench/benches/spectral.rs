use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use orispec_core::graph::MixedGraph;
use orispec_core::{charpoly, isolate_largest_root, matching_polynomial, Graph};

fn charpolys(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly");
    for n in [6, 9, 12] {
        let d = MixedGraph::oriented(Graph::complete(n), &vec![1; n * (n - 1) / 2]).unwrap();
        group.bench_with_input(BenchmarkId::new("tournament", n), &d, |b, d| b.iter(|| charpoly(black_box(d))));
    }
    group.finish();
}

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching_polynomial");
    for n in [8, 10, 12] {
        let g = Graph::complete(n);
        group.bench_with_input(BenchmarkId::new("complete", n), &g, |b, g| b.iter(|| matching_polynomial(black_box(g))));
    }
    let grid = Graph::new(12, (0..12).flat_map(|v| {
        let mut e = Vec::new();
        if v % 4 != 3 {
            e.push((v, v + 1));
        }
        if v + 4 < 12 {
            e.push((v, v + 4));
        }
        e
    }))
    .unwrap();
    group.bench_function("grid_3x4", |b| b.iter(|| matching_polynomial(black_box(&grid))));
    group.finish();
}

fn roots(c: &mut Criterion) {
    let p = matching_polynomial(&Graph::complete(10));
    c.bench_function("isolate_largest_root/mu_K10", |b| b.iter(|| isolate_largest_root(black_box(&p)).unwrap()));
}

criterion_group!(benches, charpolys, matching, roots);
criterion_main!(benches);
