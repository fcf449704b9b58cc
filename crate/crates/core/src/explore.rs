//! Corpus generation and exhaustive sweeps over small graphs: minimum
//! spectral radius over three tiers of orientations, theorem checks, and the
//! bound `rho(mixed) <= rho(underlying)`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::family::{expected_charpoly_with, greedy_orientation_with, SumMethod, Verdict};
use crate::graph::{
    bfs_spanning_tree, build_mixed, cotree_edges, encode_graph6, enumerate_spanning_trees_with_limits, Graph,
    MixedGraph, SignVector, SpanningTree,
};
use crate::hermitian::{charpoly, charpoly_of_exponents, spectral_radius_of};
use crate::limits::Limits;
use crate::matching::matching_polynomial;
use crate::poly::{compare_roots, AlgebraicRoot, IntPoly};
use crate::switching::classify_mixed;

/// Upper-triangle adjacency bits in column-major order under `perm`
/// (vertex `v` placed at position `perm[v]`).
fn code_under(g: &Graph, pos: &[usize]) -> u64 {
    let mut code = 0u64;
    for &(u, v) in g.edges() {
        let (a, b) = if pos[u] < pos[v] { (pos[u], pos[v]) } else { (pos[v], pos[u]) };
        // bit index of (a, b), a < b, in column-major upper triangle
        let bit = b * (b - 1) / 2 + a;
        code |= 1 << bit;
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if code >> (b * (b - 1) / 2 + a) & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("valid code")
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Smallest adjacency code over all vertex orders that list vertices by
/// decreasing degree. Isomorphic graphs get equal codes; the code determines
/// the graph, so it is a canonical form.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical code needs n <= 11");
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for v in by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    // positions occupied by each class
    let mut starts = Vec::with_capacity(classes.len());
    let mut acc = 0;
    for c in &classes {
        starts.push(acc);
        acc += c.len();
    }
    let mut best = u64::MAX;
    let mut orders: Vec<Vec<usize>> = classes.iter().map(|c| (0..c.len()).collect()).collect();
    let mut pos = vec![0usize; n];
    loop {
        for (ci, c) in classes.iter().enumerate() {
            for (k, &v) in c.iter().enumerate() {
                pos[v] = starts[ci] + orders[ci][k];
            }
        }
        best = best.min(code_under(g, &pos));
        // odometer over per-class permutations
        let mut ci = 0;
        loop {
            if ci == classes.len() {
                return best;
            }
            if next_permutation(&mut orders[ci]) {
                break;
            }
            orders[ci].sort_unstable();
            ci += 1;
        }
    }
}

/// The graph relabelled into its canonical form.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

/// All connected graphs with `1..=max_n` vertices, one per isomorphism
/// class, in canonical form, ordered by vertex count then canonical code.
pub fn generate_corpus(max_n: usize) -> Result<Vec<Graph>> {
    generate_corpus_with(max_n, &Limits::default())
}

pub fn generate_corpus_with(max_n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    guard("max_n (corpus)", max_n, limits.corpus_n.min(11))?;
    let mut out = Vec::new();
    if max_n == 0 {
        return Ok(out);
    }
    let mut level: Vec<u64> = vec![0];
    out.push(Graph::empty(1));
    for n in 2..=max_n {
        // a connected graph minus a non-cut vertex is connected, so
        // extending every (n-1)-vertex graph by one vertex reaches all of them
        let next: HashSet<u64> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let base = graph_from_code(n - 1, code);
                (1u64..1 << (n - 1)).map(move |mask| {
                    let mut edges = base.edges().to_vec();
                    edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                    canonical_code(&Graph::new(n, edges).expect("simple"))
                })
            })
            .collect();
        level = next.into_iter().collect();
        level.sort_unstable();
        out.extend(level.iter().map(|&c| graph_from_code(n, c)));
    }
    Ok(out)
}

/// A graph6 string identifying the graph in reports.
pub fn graph_id(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| g.to_string())
}

// exact minimum over (poly, witness) pairs; first occurrence wins ties
fn exact_min<W: Clone + Send + Sync>(items: Vec<(IntPoly, W)>) -> Option<(AlgebraicRoot, IntPoly, W)> {
    let mut seen: HashMap<IntPoly, usize> = HashMap::new();
    let mut uniq: Vec<(IntPoly, W)> = Vec::new();
    for (p, w) in items {
        if !seen.contains_key(&p) {
            seen.insert(p.clone(), uniq.len());
            uniq.push((p, w));
        }
    }
    let radii: Vec<AlgebraicRoot> = uniq.par_iter().map(|(p, _)| spectral_radius_of(p)).collect();
    let mut best: Option<usize> = None;
    for i in 0..uniq.len() {
        best = match best {
            Some(b) if compare_roots(&radii[i], &radii[b]) != Ordering::Less => Some(b),
            _ => Some(i),
        };
    }
    best.map(|b| (radii[b].clone(), uniq[b].0.clone(), uniq[b].1.clone()))
}

fn complete_polys(g: &Graph, free: &[usize], fixed: &[u8]) -> Vec<(IntPoly, SignVector)> {
    let r = free.len();
    (0..1usize << r)
        .into_par_iter()
        .map(|c| {
            let mut exps = fixed.to_vec();
            for (j, &idx) in free.iter().enumerate() {
                exps[idx] = if c >> (r - 1 - j) & 1 == 1 { 1 } else { 3 };
            }
            let signs = exps.iter().map(|&e| if e == 1 { 1 } else { -1 }).collect();
            let sv = SignVector::new(g.edges().to_vec(), signs).expect("edges sorted");
            (charpoly_of_exponents(g.n(), g.edges(), &exps), sv)
        })
        .collect()
}

/// Minimum spectral radius over complete orientations of `g` (all edges
/// arcs). The tree edges of the BFS tree at 0 are fixed as `u -> v` with
/// `u < v`: a switching with phases in `{0, 2}` flips any set of tree arcs,
/// so every complete orientation is equivalent to one of these `2^m`.
/// Returns the radius and a witness over all edges.
pub fn min_rho_complete(g: &Graph) -> Result<(AlgebraicRoot, SignVector)> {
    min_rho_complete_with(g, &Limits::default())
}

pub fn min_rho_complete_with(g: &Graph, limits: &Limits) -> Result<(AlgebraicRoot, SignVector)> {
    let t = bfs_spanning_tree(g, 0)?;
    let cotree = cotree_edges(g, &t);
    guard("cotree edges (complete orientations)", cotree.len(), limits.complete_edges)?;
    if g.edge_count() == 0 {
        return Ok((AlgebraicRoot::from_integer(0), SignVector::new(Vec::new(), Vec::new())?));
    }
    let free: Vec<usize> = cotree.iter().map(|&(u, v)| g.edge_index(u, v).expect("edge")).collect();
    let fixed = vec![1u8; g.edge_count()];
    let (rho, _, w) = exact_min(complete_polys(g, &free, &fixed)).expect("nonempty");
    Ok((rho, w))
}

/// Same minimum without the tree reduction: all `2^|E|` orientations.
pub fn min_rho_complete_exhaustive(g: &Graph, limits: &Limits) -> Result<(AlgebraicRoot, SignVector)> {
    guard("edges (complete orientations)", g.edge_count(), limits.complete_edges)?;
    if g.edge_count() == 0 {
        return Ok((AlgebraicRoot::from_integer(0), SignVector::new(Vec::new(), Vec::new())?));
    }
    let free: Vec<usize> = (0..g.edge_count()).collect();
    let (rho, _, w) = exact_min(complete_polys(g, &free, &vec![1u8; g.edge_count()])).expect("nonempty");
    Ok((rho, w))
}

/// One switching class of complete orientations.
#[derive(Debug, Clone, Serialize)]
pub struct OrientationClass {
    /// Lexicographically smallest member, one sign per edge.
    pub representative: SignVector,
    pub size: usize,
    pub charpoly: IntPoly,
    pub rho: AlgebraicRoot,
}

/// All `2^|E|` complete orientations grouped into switching classes.
pub fn complete_orientation_classes(g: &Graph, limits: &Limits) -> Result<Vec<OrientationClass>> {
    guard("edges (orientation classes)", g.edge_count(), limits.classify_m)?;
    let signs: Vec<SignVector> = SignVector::all(g.edges()).collect();
    let graphs = signs
        .iter()
        .map(|s| MixedGraph::oriented(g.clone(), s.signs()))
        .collect::<Result<Vec<_>>>()?;
    Ok(classify_mixed(&graphs)?
        .into_iter()
        .map(|c| {
            let p = charpoly(&graphs[c[0]]);
            OrientationClass {
                representative: signs[c[0]].clone(),
                size: c.len(),
                rho: spectral_radius_of(&p),
                charpoly: p,
            }
        })
        .collect())
}

/// Minimum spectral radius over every spanning tree and every partial
/// orientation with respect to it. Ties go to the first tree (in
/// enumeration order) and then the smallest sign vector.
pub fn min_rho_partial(g: &Graph) -> Result<(AlgebraicRoot, SpanningTree, SignVector)> {
    min_rho_partial_with(g, &Limits::default())
}

pub fn min_rho_partial_with(g: &Graph, limits: &Limits) -> Result<(AlgebraicRoot, SpanningTree, SignVector)> {
    guard("n (partial orientations)", g.n(), limits.partial_n)?;
    let trees = enumerate_spanning_trees_with_limits(g, limits)?;
    let m = g.edge_count() + 1 - g.n();
    let work = trees.len().saturating_mul(1usize.checked_shl(m as u32).unwrap_or(usize::MAX));
    guard("tree-orientation pairs", work, limits.partial_work)?;
    let mut items = Vec::with_capacity(work);
    for t in &trees {
        let cotree = cotree_edges(g, t);
        let polys: Vec<(IntPoly, (SpanningTree, SignVector))> = (0..1u64 << m)
            .into_par_iter()
            .map(|i| {
                let s = SignVector::from_index(cotree.clone(), i);
                let p = charpoly(&build_mixed(g, t, &s).expect("consistent"));
                (p, (t.clone(), s))
            })
            .collect();
        items.extend(polys);
    }
    let (rho, _, (t, s)) = exact_min(items).ok_or_else(|| Error::InvalidGraph("graph has no vertices".into()))?;
    Ok((rho, t, s))
}

/// Minimum spectral radius over all mixed graphs on `g` (every edge
/// undirected or an arc either way), `3^|E|` of them.
pub fn min_rho_mixed(g: &Graph, limits: &Limits) -> Result<(AlgebraicRoot, MixedGraph)> {
    guard("edges (all mixed graphs)", g.edge_count(), limits.mixed_edges)?;
    let e = g.edge_count();
    let total = 3usize.pow(e as u32);
    let items: Vec<(IntPoly, Vec<u8>)> = (0..total)
        .into_par_iter()
        .map(|mut c| {
            let mut exps = vec![0u8; e];
            for x in exps.iter_mut().rev() {
                *x = [0, 1, 3][c % 3];
                c /= 3;
            }
            (charpoly_of_exponents(g.n(), g.edges(), &exps), exps)
        })
        .collect();
    let (rho, _, exps) = exact_min(items).ok_or_else(|| Error::InvalidGraph("graph has no vertices".into()))?;
    Ok((rho, MixedGraph::from_exponents(g.clone(), &exps)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct CompleteTier {
    pub rho: AlgebraicRoot,
    pub signs: SignVector,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartialTier {
    pub rho: AlgebraicRoot,
    pub tree: Vec<(usize, usize)>,
    pub signs: SignVector,
}

#[derive(Debug, Clone, Serialize)]
pub struct MixedTier {
    pub rho: AlgebraicRoot,
    pub witness: String,
}

/// Minimum spectral radius over complete orientations versus partial
/// orientations (and, for small graphs, all mixed graphs).
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub complete: CompleteTier,
    pub partial: PartialTier,
    /// `min_complete` compared with `min_partial`.
    pub verdict: Verdict,
    /// `LT` or `EQ`; `GT` means partial orientations beat every complete one.
    pub consistent: bool,
    pub mixed: Option<MixedTier>,
}

pub fn conjecture_report(g: &Graph) -> Result<ConjectureReport> {
    conjecture_report_with(g, &Limits::default())
}

pub fn conjecture_report_with(g: &Graph, limits: &Limits) -> Result<ConjectureReport> {
    let (crho, csigns) = min_rho_complete_with(g, limits)?;
    let (prho, ptree, psigns) = min_rho_partial_with(g, limits)?;
    let verdict = Verdict::from(compare_roots(&crho, &prho));
    let mixed = if g.edge_count() <= limits.mixed_edges {
        let (rho, d) = min_rho_mixed(g, limits)?;
        Some(MixedTier { rho, witness: d.to_text() })
    } else {
        None
    };
    Ok(ConjectureReport {
        graph: graph_id(g),
        n: g.n(),
        edges: g.edge_count(),
        complete: CompleteTier { rho: crho, signs: csigns },
        partial: PartialTier { rho: prho, tree: ptree.edges().to_vec(), signs: psigns },
        consistent: verdict != Verdict::Gt,
        verdict,
        mixed,
    })
}

/// `rho(H(d))` against the adjacency spectral radius of the underlying graph.
pub fn guo_mohar_check(d: &MixedGraph) -> Verdict {
    let under = spectral_radius_of(&charpoly(&MixedGraph::undirected(d.graph().clone())));
    compare_roots(&spectral_radius_of(&charpoly(d)), &under).into()
}

#[derive(Debug, Clone, Serialize)]
pub struct GuoMoharViolation {
    pub graph: String,
    pub mixed: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GuoMoharReport {
    pub graphs: usize,
    /// Distinct charpolys compared, summed over graphs.
    pub checked: usize,
    pub violations: Vec<GuoMoharViolation>,
}

/// Checks `rho(mixed) <= rho(underlying)` for every mixed graph the other
/// sweeps generate: partial orientations for the BFS tree at every root,
/// reduced complete orientations, and all mixed graphs when `|E|` is within
/// the mixed-tier guard. Tiers over their guards are skipped.
pub fn guo_mohar_sweep(corpus: &[Graph], limits: &Limits) -> GuoMoharReport {
    let per_graph: Vec<(usize, Vec<GuoMoharViolation>)> = corpus
        .par_iter()
        .map(|g| {
            let mut cands: Vec<Vec<u8>> = Vec::new();
            let m = (g.edge_count() + 1).saturating_sub(g.n());
            if m <= limits.brute_m {
                for root in 0..g.n() {
                    let Ok(t) = bfs_spanning_tree(g, root) else { continue };
                    for s in SignVector::all(&cotree_edges(g, &t)) {
                        cands.push(build_mixed(g, &t, &s).expect("consistent").exponents());
                    }
                }
            }
            if m <= limits.complete_edges {
                if let Ok(t) = bfs_spanning_tree(g, 0) {
                    let free: Vec<usize> =
                        cotree_edges(g, &t).iter().map(|&(u, v)| g.edge_index(u, v).expect("edge")).collect();
                    for c in 0..1usize << free.len() {
                        let mut exps = vec![1u8; g.edge_count()];
                        for (j, &idx) in free.iter().enumerate() {
                            if c >> j & 1 == 1 {
                                exps[idx] = 3;
                            }
                        }
                        cands.push(exps);
                    }
                }
            }
            if g.edge_count() <= limits.mixed_edges {
                for mut c in 0..3usize.pow(g.edge_count() as u32) {
                    let mut exps = vec![0u8; g.edge_count()];
                    for x in exps.iter_mut() {
                        *x = [0, 1, 3][c % 3];
                        c /= 3;
                    }
                    cands.push(exps);
                }
            }
            let under = spectral_radius_of(&charpoly(&MixedGraph::undirected(g.clone())));
            let mut seen: HashSet<IntPoly> = HashSet::new();
            let mut bad = Vec::new();
            for exps in cands {
                let p = charpoly_of_exponents(g.n(), g.edges(), &exps);
                if !seen.insert(p.clone()) {
                    continue;
                }
                if compare_roots(&spectral_radius_of(&p), &under) == Ordering::Greater {
                    let d = MixedGraph::from_exponents(g.clone(), &exps).expect("admissible");
                    bad.push(GuoMoharViolation { graph: graph_id(g), mixed: d.to_text() });
                }
            }
            (seen.len(), bad)
        })
        .collect();
    let mut report = GuoMoharReport { graphs: corpus.len(), ..Default::default() };
    for (checked, bad) in per_graph {
        report.checked += checked;
        report.violations.extend(bad);
    }
    report
}

/// Per-graph theorem checks over the BFS tree at every root.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremSweep {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub cotree: usize,
    /// Average charpoly equals the matching polynomial, for every root.
    pub expectation_holds: bool,
    /// Greedy verdict per root; absent when the root was skipped by guards.
    pub greedy: Vec<Option<Verdict>>,
    /// For bipartite graphs: every partial orientation of the BFS tree at 0
    /// has a charpoly with only even or only odd powers.
    pub bipartite_symmetric: Option<bool>,
}

impl TheoremSweep {
    pub fn consistent(&self) -> bool {
        self.expectation_holds
            && self.greedy.iter().flatten().all(|v| *v != Verdict::Gt)
            && self.bipartite_symmetric != Some(false)
    }
}

pub fn theorem_sweep(g: &Graph, limits: &Limits) -> Result<TheoremSweep> {
    let mu = matching_polynomial(g);
    let m = (g.edge_count() + 1).saturating_sub(g.n());
    let mut expectation_holds = true;
    let mut greedy = Vec::with_capacity(g.n());
    for root in 0..g.n() {
        let t = bfs_spanning_tree(g, root)?;
        if expected_charpoly_with(g, &t, limits)? != mu {
            expectation_holds = false;
        }
        greedy.push(match greedy_orientation_with(g, &t, SumMethod::Matching, limits) {
            Ok(c) => Some(c.verdict),
            Err(Error::Defect(_)) => Some(Verdict::Gt),
            Err(Error::Guard { .. }) => None,
            Err(e) => return Err(e),
        });
    }
    let bipartite_symmetric = if g.is_bipartite() && m <= limits.brute_m {
        let t = bfs_spanning_tree(g, 0)?;
        let cotree = cotree_edges(g, &t);
        let ok = SignVector::all(&cotree)
            .all(|s| charpoly(&build_mixed(g, &t, &s).expect("consistent")).has_symmetric_roots());
        Some(ok)
    } else {
        None
    };
    Ok(TheoremSweep {
        graph: graph_id(g),
        n: g.n(),
        edges: g.edge_count(),
        cotree: m,
        expectation_holds,
        greedy,
        bipartite_symmetric,
    })
}
