mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orispec_core::family::{
    conditional_sum_charpoly, conditional_sum_fast, greedy_orientation_with, SumMethod,
};
use orispec_core::graph::{build_mixed, cotree_edges, SpanningTree};
use orispec_core::hermitian::{
    eigenvalues_numeric, hermitian_adjacency, largest_eigenvalue, smallest_eigenvalue, spectral_radius_of,
};
use orispec_core::*;

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let k = pairs.len();
            prop::collection::vec(prop::bool::weighted(0.5), k).prop_map(move |mask| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
                Graph::new(n, edges).unwrap()
            })
        })
        .prop_filter("connected", Graph::is_connected)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_matches_bareiss(g in arb_connected(7), seed in any::<u64>()) {
        let h = hermitian_adjacency(&common::random_mixed(&g, &mut rng(seed)));
        prop_assert_eq!(h.charpoly(), common::charpoly_bareiss(&h));
    }

    #[test]
    fn jacobi_agrees_with_exact_roots(g in arb_connected(7), seed in any::<u64>()) {
        let d = common::random_mixed(&g, &mut rng(seed));
        let p = charpoly(&d);
        let ev = eigenvalues_numeric(&hermitian_adjacency(&d), 1e-10);
        let exact = roots_numeric(&p, 1e-12).unwrap();
        for (a, b) in ev.iter().zip(&exact) {
            prop_assert!((a - b).abs() < 1e-8, "{:?} vs {:?}", ev, exact);
        }
        prop_assert!(largest_eigenvalue(&p).cmp_rational(&num_rational::BigRational::from_float(ev[ev.len() - 1] + 1e-6).unwrap()) == Ordering::Less);
        let rho = spectral_radius_of(&p);
        let want = ev[ev.len() - 1].max(-ev[0]);
        prop_assert!((rho.approx() - want).abs() < 1e-8);
    }

    #[test]
    fn switching_and_converse_preserve_charpoly(g in arb_connected(7), seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = common::random_mixed(&g, &mut r);
        let p = charpoly(&d);
        prop_assert_eq!(charpoly(&converse(&d)), p.clone());
        let phase: Vec<u8> = (0..g.n()).map(|_| r.random_range(0..4)).collect();
        let map = SwitchingMap::new(phase).unwrap();
        if let Ok(img) = apply_switching(&d, &map) {
            prop_assert_eq!(charpoly(&img), p);
            let cert = switching_equivalent(&d, &img).unwrap().expect("image is equivalent");
            prop_assert_eq!(cert.apply(&d).unwrap(), img);
        }
    }

    #[test]
    fn expected_charpoly_over_any_tree(g in arb_connected(7), seed in any::<u64>()) {
        prop_assume!(g.edge_count() + 1 - g.n() <= 10);
        let t = common::random_tree(&g, &mut rng(seed));
        prop_assert_eq!(expected_charpoly(&g, &t).unwrap(), matching_polynomial(&g));
    }

    #[test]
    fn fast_sums_match_enumeration(g in arb_connected(7), seed in any::<u64>()) {
        let m = g.edge_count() + 1 - g.n();
        prop_assume!(m <= 9);
        let mut r = rng(seed);
        let t = common::random_tree(&g, &mut r);
        let k = r.random_range(0..=m);
        let prefix = AssignmentPrefix::new(common::random_signs(k, &mut r)).unwrap();
        prop_assert_eq!(
            conditional_sum_fast(&g, &t, &prefix).unwrap(),
            conditional_sum_charpoly(&g, &t, &prefix).unwrap()
        );
    }

    #[test]
    fn greedy_is_method_independent_and_bounded(g in arb_connected(7), seed in any::<u64>()) {
        prop_assume!(g.edge_count() + 1 - g.n() <= 8);
        let t = common::random_tree(&g, &mut rng(seed));
        let a = greedy_orientation_with(&g, &t, SumMethod::Matching, &Limits::default()).unwrap();
        let b = greedy_orientation_with(&g, &t, SumMethod::BruteForce, &Limits::default()).unwrap();
        prop_assert_eq!(&a.signs, &b.signs);
        prop_assert!(a.verdict != Verdict::Gt);
        // deterministic
        let c = greedy_orientation(&g, &t).unwrap();
        prop_assert_eq!(&a.signs, &c.signs);
        // the chosen child never has the larger root
        for level in &a.trace {
            let ord = compare_roots(&level.plus_root, &level.minus_root);
            prop_assert_eq!(level.chosen, if ord == Ordering::Greater { -1 } else { 1 });
        }
    }

    #[test]
    fn rank_one_identity(g in arb_connected(7), seed in any::<u64>()) {
        let (t, s) = common::random_partial(&g, &mut rng(seed));
        prop_assert!(verify_rank_one_identity(&g, &t, &s).unwrap().holds());
    }

    #[test]
    fn matching_polynomial_properties(g in arb_connected(8)) {
        let mu = matching_polynomial(&g);
        prop_assert!(is_real_rooted(&mu).unwrap());
        prop_assert!(mu.has_symmetric_roots());
        let counts = matching_counts(&g);
        prop_assert_eq!(counts.get(0), 1.into());
        prop_assert_eq!(counts.get(1), g.edge_count().into());
        if g.n() <= 7 {
            prop_assert_eq!(counts.counts(), &common::matching_counts_brute(&g)[..]);
        }
        // rho(mu) <= rho(A(G))
        let adj = charpoly(&graph::MixedGraph::undirected(g.clone()));
        prop_assert!(compare_roots(&matching_radius(&g), &largest_eigenvalue(&adj)) != Ordering::Greater);
    }

    #[test]
    fn trees_have_charpoly_equal_to_matching_polynomial(n in 2usize..9, seed in any::<u64>()) {
        // random labelled tree: attach each vertex to an earlier one
        let mut r = rng(seed);
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (r.random_range(0..v), v)).collect();
        let g = Graph::new(n, edges).unwrap();
        prop_assert_eq!(charpoly(&graph::MixedGraph::undirected(g.clone())), matching_polynomial(&g));
    }

    #[test]
    fn parity_test_matches_direct_switching(g in arb_connected(5), seed in any::<u64>()) {
        let (t, s) = common::random_partial(&g, &mut rng(seed));
        let d = build_mixed(&g, &t, &s).unwrap();
        prop_assert_eq!(equiv_to_oriented(&g, &t).unwrap(), common::switchable_to_oriented(&d));
        prop_assert_eq!(equiv_to_unoriented(&g, &t).unwrap(), switching_equivalent(&d, &graph::MixedGraph::undirected(g.clone())).unwrap().is_some());
    }

    #[test]
    fn bipartite_symmetry(g in arb_connected(7), seed in any::<u64>()) {
        prop_assume!(g.is_bipartite());
        let (t, s) = common::random_partial(&g, &mut rng(seed));
        let p = charpoly(&build_mixed(&g, &t, &s).unwrap());
        prop_assert!(p.has_symmetric_roots());
        let hi = largest_eigenvalue(&p);
        let lo = smallest_eigenvalue(&p);
        prop_assert_eq!(compare_roots(&hi, &lo.neg()), Ordering::Equal);
    }
}

#[test]
fn audit_on_example_trees() {
    let g = parse_edge_list("0 1\n1 2\n2 3\n0 3\n1 3\n0 2").unwrap();
    for t in enumerate_spanning_trees(&g).unwrap() {
        let r = family::audit_interlacing_family(&g, &t).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.nodes, 15);
    }
}

#[test]
fn verify_bound_rejects_foreign_signs() {
    let g = Graph::cycle(4);
    let t = SpanningTree::from_edges(&g, &[(0, 1), (1, 2), (2, 3)], 0).unwrap();
    let wrong = graph::SignVector::new(vec![(0, 2)], vec![1]).unwrap();
    assert!(verify_bound(&g, &t, &wrong).is_err());
    assert_eq!(cotree_edges(&g, &t), vec![(0, 3)]);
}
