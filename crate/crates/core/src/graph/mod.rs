//! Simple graphs, spanning trees and partial orientations.

mod orient;
mod parse;
mod tree;

pub use orient::{build_mixed, cotree_edges, EdgeState, MixedGraph, SignVector};
pub use parse::{encode_graph6, parse_edge_list, parse_graph6, parse_mixed};
pub use tree::{
    bfs_spanning_tree, enumerate_spanning_trees, enumerate_spanning_trees_with_limits,
    fundamental_cycle, tree_parity_bipartition, SpanningTree,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

pub(crate) fn norm_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are kept sorted lexicographically; that order is the canonical edge
/// order everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Graph> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> RawGraph {
        RawGraph {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and parallel edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} out of range for n = {n}"
                )));
            }
            list.push(norm_edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "parallel edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph::from_sorted(n, list))
    }

    /// Like [`Graph::new`] but silently drops duplicate edges.
    pub fn new_dedup(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut list: Vec<Edge> = edges.into_iter().collect();
        list.sort_unstable_by_key(|&(u, v)| norm_edge(u, v));
        list.dedup_by_key(|e| norm_edge(e.0, e.1));
        Graph::new(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_sorted(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_sorted(
            n,
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
        )
    }

    pub fn star(n: usize) -> Graph {
        Graph::from_sorted(n, (1..n).map(|v| (0, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&norm_edge(u, v)).ok()
    }

    /// BFS order from `root` with ascending neighbor order; also returns parents.
    pub(crate) fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::new();
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).0.len() == self.n
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The graph with vertices `u` and `v` relabeled by `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// Spanning subgraph keeping only the edges for which `keep` is true.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(Edge) -> bool) -> Graph {
        Graph::from_sorted(self.n, self.edges.iter().copied().filter(|&e| keep(e)).collect())
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        assert_eq!(Graph::new_dedup(3, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn bipartite_detection() {
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(3).is_bipartite());
        assert!(Graph::empty(3).is_bipartite());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn serde_round_trip_validates() {
        let g = Graph::cycle(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
