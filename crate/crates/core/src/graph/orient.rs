use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, SpanningTree};
use crate::error::{Error, Result};

/// State of one edge of a mixed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeState {
    Undirected,
    Arc { tail: usize, head: usize },
}

/// Edges of `g` outside `t`, in the canonical (sorted) edge order.
pub fn cotree_edges(g: &Graph, t: &SpanningTree) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !t.contains_edge(u, v))
        .collect()
}

/// A partial orientation relative to a spanning tree: one sign per cotree edge.
///
/// For cotree edge `(u, v)` with `u < v`, sign `+1` orients it `u -> v` and
/// `-1` orients it `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignVector {
    cotree: Vec<Edge>,
    signs: Vec<i8>,
}

impl SignVector {
    pub fn new(cotree: Vec<Edge>, signs: Vec<i8>) -> Result<SignVector> {
        if cotree.len() != signs.len() {
            return Err(Error::Mismatch(format!(
                "{} cotree edges but {} signs",
                cotree.len(),
                signs.len()
            )));
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::Mismatch(format!("sign {s} is not +1 or -1")));
        }
        if cotree.iter().any(|&(u, v)| u >= v) || cotree.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Mismatch("cotree edges must be sorted (u < v)".into()));
        }
        Ok(SignVector { cotree, signs })
    }

    pub fn for_tree(g: &Graph, t: &SpanningTree, signs: Vec<i8>) -> Result<SignVector> {
        SignVector::new(cotree_edges(g, t), signs)
    }

    /// The `index`-th sign vector in lexicographic order (`-1 < +1`).
    pub fn from_index(cotree: Vec<Edge>, index: u64) -> SignVector {
        let m = cotree.len();
        assert!(m < 64 && index < 1u64 << m, "index out of range");
        let signs = (0..m)
            .map(|j| if index >> (m - 1 - j) & 1 == 1 { 1 } else { -1 })
            .collect();
        SignVector { cotree, signs }
    }

    /// All `2^m` sign vectors over `cotree`, in lexicographic order.
    pub fn all(cotree: &[Edge]) -> impl Iterator<Item = SignVector> + '_ {
        assert!(cotree.len() < 64);
        (0..1u64 << cotree.len()).map(move |i| SignVector::from_index(cotree.to_vec(), i))
    }

    pub fn index(&self) -> u64 {
        self.signs
            .iter()
            .fold(0u64, |acc, &s| acc << 1 | u64::from(s > 0))
    }

    pub fn m(&self) -> usize {
        self.signs.len()
    }

    pub fn cotree(&self) -> &[Edge] {
        &self.cotree
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            cotree: self.cotree.clone(),
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signs.is_empty() {
            return write!(f, "()");
        }
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// A graph whose edges are each either undirected or an arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    graph: Graph,
    states: Vec<EdgeState>,
}

impl MixedGraph {
    /// `states` is aligned with `graph.edges()`.
    pub fn new(graph: Graph, states: Vec<EdgeState>) -> Result<MixedGraph> {
        if states.len() != graph.edge_count() {
            return Err(Error::Mismatch(format!(
                "{} states for {} edges",
                states.len(),
                graph.edge_count()
            )));
        }
        for (&(u, v), st) in graph.edges().iter().zip(&states) {
            if let EdgeState::Arc { tail, head } = *st {
                if !((tail, head) == (u, v) || (tail, head) == (v, u)) {
                    return Err(Error::Mismatch(format!(
                        "arc {tail}->{head} on edge {{{u}, {v}}}"
                    )));
                }
            }
        }
        Ok(MixedGraph { graph, states })
    }

    pub fn undirected(graph: Graph) -> MixedGraph {
        let states = vec![EdgeState::Undirected; graph.edge_count()];
        MixedGraph { graph, states }
    }

    /// Every edge oriented; `signs[i] = +1` orients edge `(u, v)` (u < v) as `u -> v`.
    pub fn oriented(graph: Graph, signs: &[i8]) -> Result<MixedGraph> {
        if signs.len() != graph.edge_count() {
            return Err(Error::Mismatch("one sign per edge required".into()));
        }
        let states = graph
            .edges()
            .iter()
            .zip(signs)
            .map(|(&(u, v), &s)| match s {
                1 => Ok(EdgeState::Arc { tail: u, head: v }),
                -1 => Ok(EdgeState::Arc { tail: v, head: u }),
                _ => Err(Error::Mismatch(format!("sign {s} is not +1 or -1"))),
            })
            .collect::<Result<_>>()?;
        Ok(MixedGraph { graph, states })
    }

    /// Builds from per-edge exponents `k` meaning `h_uv = i^k` for `u < v`;
    /// `k = 2` (entry `-1`) is rejected.
    pub fn from_exponents(graph: Graph, exps: &[u8]) -> Result<MixedGraph> {
        let states = graph
            .edges()
            .iter()
            .zip(exps)
            .map(|(&(u, v), &k)| match k % 4 {
                0 => Ok(EdgeState::Undirected),
                1 => Ok(EdgeState::Arc { tail: u, head: v }),
                3 => Ok(EdgeState::Arc { tail: v, head: u }),
                _ => Err(Error::Inadmissible(u, v)),
            })
            .collect::<Result<_>>()?;
        MixedGraph::new(graph, states)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    /// Exponent `k` with `h_uv = i^k` for the `idx`-th edge `(u, v)`, `u < v`.
    pub fn exponent(&self, idx: usize) -> u8 {
        match self.states[idx] {
            EdgeState::Undirected => 0,
            EdgeState::Arc { tail, head } => {
                if tail < head {
                    1
                } else {
                    3
                }
            }
        }
    }

    pub fn exponents(&self) -> Vec<u8> {
        (0..self.states.len()).map(|i| self.exponent(i)).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.states
            .iter()
            .filter(|s| matches!(s, EdgeState::Arc { .. }))
            .count()
    }

    /// No undirected edges.
    pub fn is_oriented(&self) -> bool {
        self.arc_count() == self.states.len()
    }

    /// The mixed-graph text format accepted by [`super::parse_mixed`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n());
        for (&(u, v), st) in self.graph.edges().iter().zip(&self.states) {
            match st {
                EdgeState::Undirected => out.push_str(&format!("{u} {v}\n")),
                EdgeState::Arc { tail, head } => out.push_str(&format!("{tail} > {head}\n")),
            }
        }
        out
    }
}

/// Orients the cotree edges of `g` by `s`; tree edges stay undirected.
pub fn build_mixed(g: &Graph, t: &SpanningTree, s: &SignVector) -> Result<MixedGraph> {
    if !t.spans(g) {
        return Err(Error::Mismatch("tree is not a spanning tree of the graph".into()));
    }
    let cotree = cotree_edges(g, t);
    if cotree != s.cotree() {
        return Err(Error::Mismatch(format!(
            "sign vector covers {:?}, graph cotree is {:?}",
            s.cotree(),
            cotree
        )));
    }
    let mut states = vec![EdgeState::Undirected; g.edge_count()];
    for (&(u, v), &sign) in s.cotree().iter().zip(s.signs()) {
        let idx = g.edge_index(u, v).expect("cotree edge in graph");
        states[idx] = if sign > 0 {
            EdgeState::Arc { tail: u, head: v }
        } else {
            EdgeState::Arc { tail: v, head: u }
        };
    }
    Ok(MixedGraph {
        graph: g.clone(),
        states,
    })
}

#[derive(Serialize, Deserialize)]
struct RawMixed {
    n: usize,
    undirected: Vec<Edge>,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for MixedGraph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut raw = RawMixed {
            n: self.n(),
            undirected: Vec::new(),
            arcs: Vec::new(),
        };
        for (&e, st) in self.graph.edges().iter().zip(&self.states) {
            match *st {
                EdgeState::Undirected => raw.undirected.push(e),
                EdgeState::Arc { tail, head } => raw.arcs.push((tail, head)),
            }
        }
        raw.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MixedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMixed::deserialize(de)?;
        let graph = Graph::new(raw.n, raw.undirected.iter().chain(&raw.arcs).copied())
            .map_err(serde::de::Error::custom)?;
        let mut states = vec![EdgeState::Undirected; graph.edge_count()];
        for &(tail, head) in &raw.arcs {
            states[graph.edge_index(tail, head).expect("present")] = EdgeState::Arc { tail, head };
        }
        MixedGraph::new(graph, states).map_err(serde::de::Error::custom)
    }
}
