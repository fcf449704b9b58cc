//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::Rng;

use orispec_core::graph::{cotree_edges, Graph, MixedGraph, SignVector, SpanningTree};
use orispec_core::{enumerate_spanning_trees, GaussInt, HermitianMatrix, IntPoly};

/// Fraction-free Gaussian elimination; every division is exact in Z[i].
pub fn bareiss_det(mut a: Vec<GaussInt>, n: usize) -> GaussInt {
    if n == 0 {
        return GaussInt::one();
    }
    let mut sign = false;
    let mut prev = GaussInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return GaussInt::zero();
            };
            for c in 0..n {
                a.swap(k * n + c, r * n + c);
            }
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i * n + j] * &a[k * n + k]) - &(&a[i * n + k] * &a[k * n + j]);
                a[i * n + j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// `det(xI - H)` from its values at `x = 0..=n`, by Lagrange interpolation.
pub fn charpoly_bareiss(h: &HermitianMatrix) -> IntPoly {
    let n = h.n();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&x| {
            let mut m = Vec::with_capacity(n * n);
            for r in 0..n {
                for c in 0..n {
                    let mut e = -h.get(r, c);
                    if r == c {
                        e = &e + &GaussInt::new(x, 0);
                    }
                    m.push(e);
                }
            }
            let d = bareiss_det(m, n);
            assert!(d.im.is_zero(), "Hermitian determinant is real");
            d.re
        })
        .collect();
    let mut acc = vec![BigRational::zero(); n + 1];
    for (i, &xi) in xs.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.into());
            }
            basis = next;
            denom *= BigRational::from_integer((xi - xj).into());
        }
        let scale = BigRational::from_integer(ys[i].clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    IntPoly::new(
        acc.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "interpolated coefficient {c} is not an integer");
                c.to_integer()
            })
            .collect(),
    )
}

/// Matching counts by testing every edge subset.
pub fn matching_counts_brute(g: &Graph) -> Vec<BigInt> {
    let e = g.edges();
    let mut counts = vec![0u64; g.n() / 2 + 1];
    'subsets: for mask in 0u64..1 << e.len() {
        let mut used = 0u64;
        for (i, &(u, v)) in e.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let bits = 1 << u | 1 << v;
                if used & bits != 0 {
                    continue 'subsets;
                }
                used |= bits;
            }
        }
        counts[mask.count_ones() as usize] += 1;
    }
    counts.into_iter().map(BigInt::from).collect()
}

fn conj_exp(e: u8) -> u8 {
    (4 - e) % 4
}

/// Tries all `4^(n-1)` switchings with vertex 0 fixed, with and without the
/// converse.
pub fn switching_brute(d1: &MixedGraph, d2: &MixedGraph) -> bool {
    let g = d1.graph();
    let n = g.n();
    let e1 = d1.exponents();
    let e2 = d2.exponents();
    for conv in [false, true] {
        let src: Vec<u8> = if conv { e1.iter().map(|&e| conj_exp(e)).collect() } else { e1.clone() };
        for code in 0u64..1 << (2 * n.saturating_sub(1)) {
            let phase = |v: usize| if v == 0 { 0 } else { (code >> (2 * (v - 1)) & 3) as u8 };
            if g.edges()
                .iter()
                .enumerate()
                .all(|(i, &(u, v))| (src[i] + 4 - phase(u) + phase(v)) % 4 == e2[i])
            {
                return true;
            }
        }
    }
    false
}

/// All simple cycles of `g`, each as its sorted edge list, listed once.
pub fn all_cycles(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut out = Vec::new();
    // cycles whose smallest vertex is s, walked from s to a larger neighbor
    fn dfs(g: &Graph, s: usize, v: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<(usize, usize)>>) {
        for &w in g.neighbors(v) {
            if w == s && path.len() >= 3 && path[1] < *path.last().unwrap() {
                let mut edges: Vec<(usize, usize)> = path
                    .windows(2)
                    .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                    .collect();
                edges.push((s.min(v), s.max(v)));
                edges.sort_unstable();
                out.push(edges);
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                dfs(g, s, w, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        dfs(g, s, s, &mut vec![s], &mut on, &mut out);
    }
    out
}

/// Every even cycle keeps at least two of its edges outside the tree.
pub fn oriented_by_even_cycles(g: &Graph, t: &SpanningTree) -> bool {
    all_cycles(g).iter().filter(|c| c.len() % 2 == 0).all(|c| {
        let in_tree = c.iter().filter(|&&(u, v)| t.contains_edge(u, v)).count();
        in_tree + 2 <= c.len()
    })
}

/// Some switching (vertex 0 fixed) turns `d` into an oriented graph.
pub fn switchable_to_oriented(d: &MixedGraph) -> bool {
    let g = d.graph();
    let e = d.exponents();
    (0u64..1 << (2 * g.n().saturating_sub(1))).any(|code| {
        let phase = |v: usize| if v == 0 { 0 } else { (code >> (2 * (v - 1)) & 3) as u8 };
        g.edges()
            .iter()
            .enumerate()
            .all(|(i, &(u, v))| (e[i] + 4 - phase(u) + phase(v)) % 2 == 1)
    })
}

/// Number of spanning trees as a Laplacian cofactor (Bareiss on the reduced
/// Laplacian).
pub fn kirchhoff(g: &Graph) -> BigInt {
    let n = g.n();
    if n <= 1 {
        return BigInt::one();
    }
    let k = n - 1;
    let mut m = vec![GaussInt::zero(); k * k];
    for v in 1..n {
        m[(v - 1) * k + (v - 1)] = GaussInt::new(g.degree(v) as i64, 0);
    }
    for &(u, v) in g.edges() {
        if u > 0 && v > 0 {
            m[(u - 1) * k + (v - 1)] = GaussInt::new(-1, 0);
            m[(v - 1) * k + (u - 1)] = GaussInt::new(-1, 0);
        }
    }
    bareiss_det(m, k).re
}

pub fn random_signs(m: usize, rng: &mut impl Rng) -> Vec<i8> {
    (0..m).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect()
}

pub fn random_tree(g: &Graph, rng: &mut impl Rng) -> SpanningTree {
    enumerate_spanning_trees(g).unwrap().choose(rng).unwrap().clone()
}

pub fn random_partial(g: &Graph, rng: &mut impl Rng) -> (SpanningTree, SignVector) {
    let t = random_tree(g, rng);
    let cotree = cotree_edges(g, &t);
    let m = cotree.len();
    (t, SignVector::new(cotree, random_signs(m, rng)).unwrap())
}

/// Each edge undirected or an arc either way, uniformly.
pub fn random_mixed(g: &Graph, rng: &mut impl Rng) -> MixedGraph {
    let exps: Vec<u8> = (0..g.edge_count()).map(|_| [0, 1, 3][rng.random_range(0..3)]).collect();
    MixedGraph::from_exponents(g.clone(), &exps).unwrap()
}

/// All `3^|E|` mixed graphs on `g`.
pub fn all_mixed(g: &Graph) -> Vec<MixedGraph> {
    let e = g.edge_count();
    (0..3usize.pow(e as u32))
        .map(|mut c| {
            let exps: Vec<u8> = (0..e)
                .map(|_| {
                    let x = [0, 1, 3][c % 3];
                    c /= 3;
                    x
                })
                .collect();
            MixedGraph::from_exponents(g.clone(), &exps).unwrap()
        })
        .collect()
}
