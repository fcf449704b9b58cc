//! Four-way switching, converse, and switching equivalence of mixed graphs
//! over a shared underlying graph.
//!
//! Entries are tracked as exponents: edge `(u, v)`, `u < v`, with
//! `h_uv = i^e`. Conjugating by `S = diag(i^p)` maps `e` to `e - p_u + p_v`
//! (mod 4); exponent 2 would be an entry `-1`, which no mixed graph has.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::graph::{build_mixed, cotree_edges, Graph, MixedGraph, SignVector, SpanningTree};
use crate::hermitian::charpoly;
use crate::limits::Limits;

/// `S_vv = i^phase[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchingMap {
    phase: Vec<u8>,
}

impl SwitchingMap {
    pub fn new(phase: Vec<u8>) -> Result<SwitchingMap> {
        if let Some(p) = phase.iter().find(|&&p| p > 3) {
            return Err(Error::Mismatch(format!("phase {p} is not in 0..4")));
        }
        Ok(SwitchingMap { phase })
    }

    pub fn identity(n: usize) -> SwitchingMap {
        SwitchingMap { phase: vec![0; n] }
    }

    pub fn phase(&self) -> &[u8] {
        &self.phase
    }

    pub fn n(&self) -> usize {
        self.phase.len()
    }
}

/// Witness that `d2` is obtained from `d1` by (optionally) taking the
/// converse and then switching by `map`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingCertificate {
    pub map: SwitchingMap,
    pub used_converse: bool,
}

impl SwitchingCertificate {
    pub fn apply(&self, d: &MixedGraph) -> Result<MixedGraph> {
        if self.used_converse {
            apply_switching(&converse(d), &self.map)
        } else {
            apply_switching(d, &self.map)
        }
    }
}

/// `S^{-1} H(d) S`, or an error naming the first edge whose entry would be `-1`.
pub fn apply_switching(d: &MixedGraph, s: &SwitchingMap) -> Result<MixedGraph> {
    if s.n() != d.n() {
        return Err(Error::Mismatch(format!("switching on {} vertices, graph has {}", s.n(), d.n())));
    }
    let exps: Vec<u8> = d
        .graph()
        .edges()
        .iter()
        .zip(d.exponents())
        .map(|(&(u, v), e)| (e + 4 - s.phase[u] + s.phase[v]) % 4)
        .collect();
    MixedGraph::from_exponents(d.graph().clone(), &exps)
}

/// Every arc reversed.
pub fn converse(d: &MixedGraph) -> MixedGraph {
    let exps: Vec<u8> = d.exponents().into_iter().map(|e| (4 - e) % 4).collect();
    MixedGraph::from_exponents(d.graph().clone(), &exps).expect("converse keeps exponents odd or zero")
}

// propagate phases along a BFS forest, then check every edge
fn propagate(g: &Graph, e1: &[u8], e2: &[u8]) -> Option<Vec<u8>> {
    let n = g.n();
    let mut phase: Vec<Option<u8>> = vec![None; n];
    for root in 0..n {
        if phase[root].is_some() {
            continue;
        }
        phase[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = phase[u].expect("visited");
            for &w in g.neighbors(u) {
                if phase[w].is_some() {
                    continue;
                }
                let idx = g.edge_index(u, w).expect("edge");
                // e2 = e1 - p_a + p_b for a < b
                let pw = if u < w {
                    (e2[idx] + 8 - e1[idx] + pu) % 4
                } else {
                    (e1[idx] + 8 - e2[idx] + pu) % 4
                };
                phase[w] = Some(pw);
                queue.push_back(w);
            }
        }
    }
    let phase: Vec<u8> = phase.into_iter().map(|p| p.expect("all visited")).collect();
    let ok = g
        .edges()
        .iter()
        .enumerate()
        .all(|(i, &(u, v))| (e1[i] + 4 - phase[u] + phase[v]) % 4 == e2[i]);
    ok.then_some(phase)
}

/// A certificate carrying `d1` to `d2`, if one exists. Tries without the
/// converse first. Phases are normalized to 0 at the smallest vertex of
/// each component.
pub fn switching_equivalent(d1: &MixedGraph, d2: &MixedGraph) -> Result<Option<SwitchingCertificate>> {
    if d1.graph() != d2.graph() {
        return Err(Error::Mismatch("switching equivalence needs a shared underlying graph".into()));
    }
    let g = d1.graph();
    let e2 = d2.exponents();
    for used_converse in [false, true] {
        let e1 = if used_converse { converse(d1).exponents() } else { d1.exponents() };
        if let Some(phase) = propagate(g, &e1, &e2) {
            return Ok(Some(SwitchingCertificate { map: SwitchingMap { phase }, used_converse }));
        }
    }
    Ok(None)
}

/// Partition of `graphs` (all over one underlying graph) into switching
/// classes, as index lists. Classes are ordered by their first member and
/// members keep input order. Only graphs with equal charpolys are compared.
pub fn classify_mixed(graphs: &[MixedGraph]) -> Result<Vec<Vec<usize>>> {
    if let Some(first) = graphs.first() {
        if graphs.iter().any(|d| d.graph() != first.graph()) {
            return Err(Error::Mismatch("classification needs a shared underlying graph".into()));
        }
    }
    let polys: Vec<_> = graphs.par_iter().map(charpoly).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_poly: HashMap<_, Vec<usize>> = HashMap::new();
    for (i, d) in graphs.iter().enumerate() {
        let candidates = by_poly.entry(polys[i].clone()).or_default();
        let mut placed = false;
        for &c in candidates.iter() {
            let rep = classes[c][0];
            if switching_equivalent(&graphs[rep], d)?.is_some() {
                classes[c].push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            candidates.push(classes.len());
            classes.push(vec![i]);
        }
    }
    Ok(classes)
}

/// The `2^m` partial orientations w.r.t. `t`, grouped into switching classes.
pub fn classify_partial_orientations(g: &Graph, t: &SpanningTree) -> Result<Vec<Vec<SignVector>>> {
    classify_partial_orientations_with(g, t, &Limits::default())
}

pub fn classify_partial_orientations_with(
    g: &Graph,
    t: &SpanningTree,
    limits: &Limits,
) -> Result<Vec<Vec<SignVector>>> {
    if !t.spans(g) {
        return Err(Error::Mismatch("tree is not a spanning tree of the graph".into()));
    }
    let cotree = cotree_edges(g, t);
    guard("cotree edges (classification)", cotree.len(), limits.classify_m)?;
    let signs: Vec<SignVector> = SignVector::all(&cotree).collect();
    let graphs = signs.iter().map(|s| build_mixed(g, t, s)).collect::<Result<Vec<_>>>()?;
    Ok(classify_mixed(&graphs)?
        .into_iter()
        .map(|c| c.into_iter().map(|i| signs[i].clone()).collect())
        .collect())
}

/// The partial orientations w.r.t. `t` are switching equivalent to the
/// undirected graph exactly when there are no cotree edges.
pub fn equiv_to_unoriented(g: &Graph, t: &SpanningTree) -> Result<bool> {
    if !t.spans(g) {
        return Err(Error::Mismatch("tree is not a spanning tree of the graph".into()));
    }
    Ok(g.edge_count() + 1 == g.n())
}

/// Every cotree edge joins two vertices at tree depths of equal parity,
/// i.e. every fundamental cycle is odd.
pub fn equiv_to_oriented(g: &Graph, t: &SpanningTree) -> Result<bool> {
    if !t.spans(g) {
        return Err(Error::Mismatch("tree is not a spanning tree of the graph".into()));
    }
    Ok(cotree_edges(g, t).iter().all(|&(u, v)| t.depth(u) % 2 == t.depth(v) % 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, parse_mixed};
    use crate::poly::IntPoly;

    fn path_tree(g: &Graph) -> SpanningTree {
        SpanningTree::from_edges(g, &[(0, 1), (1, 2), (2, 3)], 0).unwrap()
    }

    fn chorded_c4() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n0 3\n1 3").unwrap()
    }

    #[test]
    fn apply_examples() {
        let h1 = parse_mixed("0 1\n1 2\n2 3\n0 > 3").unwrap();
        assert_eq!(apply_switching(&h1, &SwitchingMap::identity(4)).unwrap(), h1);
        let s = SwitchingMap::new(vec![0, 0, 0, 2]).unwrap();
        assert!(matches!(apply_switching(&h1, &s), Err(Error::Inadmissible(2, 3))));

        let arc = parse_mixed("0 > 1").unwrap();
        let undirected = apply_switching(&arc, &SwitchingMap::new(vec![0, 3]).unwrap()).unwrap();
        assert_eq!(undirected.arc_count(), 0);
        assert!(apply_switching(&arc, &SwitchingMap::new(vec![0, 1]).unwrap()).is_err());
    }

    #[test]
    fn converse_examples() {
        let und = MixedGraph::undirected(Graph::cycle(5));
        assert_eq!(converse(&und), und);
        assert_eq!(converse(&parse_mixed("0 > 1").unwrap()), parse_mixed("1 > 0").unwrap());
        let g = chorded_c4();
        let t = path_tree(&g);
        let s = SignVector::for_tree(&g, &t, vec![1, -1]).unwrap();
        let d = build_mixed(&g, &t, &s).unwrap();
        assert_eq!(converse(&d), build_mixed(&g, &t, &s.negated()).unwrap());
    }

    #[test]
    fn equivalence_examples() {
        let h1 = parse_mixed("0 1\n1 2\n2 3\n0 > 3").unwrap();
        let c = switching_equivalent(&h1, &h1).unwrap().unwrap();
        assert_eq!(c.map, SwitchingMap::identity(4));
        assert!(!c.used_converse);

        let h1r = parse_mixed("0 1\n1 2\n2 3\n3 > 0").unwrap();
        let c = switching_equivalent(&h1, &h1r).unwrap().unwrap();
        assert_eq!(c.apply(&h1).unwrap(), h1r);

        let d1 = parse_mixed("0 1\n1 2\n2 3\n0 > 3\n3 > 1").unwrap();
        let d2 = parse_mixed("0 1\n1 2\n2 3\n0 > 3\n1 > 3").unwrap();
        assert_ne!(charpoly(&d1), charpoly(&d2));
        assert!(switching_equivalent(&d1, &d2).unwrap().is_none());

        assert!(switching_equivalent(&h1, &MixedGraph::undirected(Graph::path(4))).is_err());
    }

    #[test]
    fn classes() {
        let g = chorded_c4();
        let t = path_tree(&g);
        let classes = classify_partial_orientations(&g, &t).unwrap();
        assert_eq!(classes.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2]);
        let mut polys: Vec<IntPoly> = classes
            .iter()
            .map(|c| charpoly(&build_mixed(&g, &t, &c[0]).unwrap()))
            .collect();
        polys.sort_by_key(|p| p.to_string());
        assert_eq!(polys, vec![IntPoly::from_i64(&[2, 2, -5, 0, 1]), IntPoly::from_i64(&[2, -2, -5, 0, 1])]);
        // each class is closed under converse
        for c in &classes {
            assert_eq!(c[1], c[0].negated());
        }

        let g = Graph::cycle(4);
        let classes = classify_partial_orientations(&g, &path_tree(&g)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 2);

        let g = Graph::star(4);
        let t = crate::graph::bfs_spanning_tree(&g, 0).unwrap();
        let classes = classify_partial_orientations(&g, &t).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0][0].m(), 0);
    }

    #[test]
    fn lemma_predicates() {
        let tree = Graph::path(5);
        let t = crate::graph::bfs_spanning_tree(&tree, 0).unwrap();
        assert!(equiv_to_unoriented(&tree, &t).unwrap());
        assert!(equiv_to_oriented(&tree, &t).unwrap());

        let c4 = Graph::cycle(4);
        let t = path_tree(&c4);
        assert!(!equiv_to_unoriented(&c4, &t).unwrap());
        assert!(!equiv_to_oriented(&c4, &t).unwrap());

        let g = chorded_c4();
        assert!(!equiv_to_oriented(&g, &path_tree(&g)).unwrap());
        let star = SpanningTree::from_edges(&g, &[(0, 1), (1, 2), (1, 3)], 1).unwrap();
        assert!(equiv_to_oriented(&g, &star).unwrap());
        assert!(!equiv_to_unoriented(&g, &star).unwrap());
    }

    #[test]
    fn json() {
        let h1 = parse_mixed("0 1\n1 2\n2 3\n0 > 3").unwrap();
        let h1r = parse_mixed("0 1\n1 2\n2 3\n3 > 0").unwrap();
        let c = switching_equivalent(&h1, &h1r).unwrap().unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert!(v["map"].is_array());
        assert!(v["used_converse"].is_boolean());
    }
}
