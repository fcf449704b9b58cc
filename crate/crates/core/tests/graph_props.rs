mod common;

use proptest::prelude::*;

use orispec_core::graph::{bfs_spanning_tree, cotree_edges, fundamental_cycle, MixedGraph};
use orispec_core::{
    encode_graph6, enumerate_spanning_trees, parse_edge_list, parse_graph6, parse_mixed, Graph,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        prop::collection::vec(any::<bool>(), k).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", Graph::is_connected)
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(9)) {
        let mut text = format!("n={}\n", g.n());
        for (u, v) in g.edges() {
            text.push_str(&format!("{v} {u}\n"));
        }
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in arb_graph(8)) {
        let s = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), g.clone());
        let d = MixedGraph::undirected(g);
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<MixedGraph>(&s).unwrap(), d);
    }

    #[test]
    fn spanning_tree_count_is_kirchhoff(g in arb_connected(7)) {
        let trees = enumerate_spanning_trees(&g).unwrap();
        prop_assert_eq!(num_bigint::BigInt::from(trees.len()), common::kirchhoff(&g));
        for t in &trees {
            prop_assert!(t.spans(&g));
            prop_assert_eq!(t.edges().len() + 1, g.n());
        }
        let mut sorted: Vec<_> = trees.iter().map(|t| t.edges().to_vec()).collect();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), trees.len());
    }

    #[test]
    fn bfs_trees_and_fundamental_cycles(g in arb_connected(8), root in 0usize..8) {
        let root = root % g.n();
        let t = bfs_spanning_tree(&g, root).unwrap();
        prop_assert_eq!(t.root(), root);
        for v in 0..g.n() {
            // BFS depth is the graph distance, which never exceeds neighbor depth + 1
            for &w in g.neighbors(v) {
                prop_assert!(t.depth(v) <= t.depth(w) + 1);
            }
        }
        for e in cotree_edges(&g, &t) {
            let cyc = fundamental_cycle(&t, e).unwrap();
            prop_assert_eq!(cyc.first().copied(), Some(e.0));
            prop_assert_eq!(cyc.last().copied(), Some(e.1));
            for w in cyc.windows(2) {
                prop_assert!(t.contains_edge(w[0], w[1]));
            }
        }
    }

    #[test]
    fn mixed_text_round_trip(g in arb_graph(7), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = common::random_mixed(&g, &mut rng);
        prop_assert_eq!(parse_mixed(&d.to_text()).unwrap(), d);
    }
}

#[test]
fn parse_errors_name_the_line() {
    let err = parse_edge_list("0 1\n1 1").unwrap_err().to_string();
    assert!(err.contains('2'), "{err}");
    assert!(parse_edge_list("n=3\n0 5").is_err());
    assert!(parse_edge_list("0 x").is_err());
    assert!(parse_graph6("C\u{7f}").is_err());
    assert!(parse_mixed("0 > 1\n1 > 0").is_err());
}

#[test]
fn disconnected_graphs_have_no_spanning_tree() {
    let g = parse_edge_list("n=4\n0 1\n2 3").unwrap();
    assert!(bfs_spanning_tree(&g, 0).is_err());
    assert!(enumerate_spanning_trees(&g).is_err());
}
