//! Sums of characteristic polynomials over partial orientations, the greedy
//! descent through the sign tree, and an exhaustive audit of the interlacing
//! property along that tree.
//!
//! Conditional sums use the sum convention: the node for prefix
//! `(s_1, ..., s_k)` is the sum, not the average, of the `2^(m-k)` leaf
//! charpolys below it. Positive scaling never moves roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::graph::{build_mixed, cotree_edges, Edge, Graph, MixedGraph, SignVector, SpanningTree};
use crate::hermitian::{charpoly_of_exponents, largest_eigenvalue};
use crate::limits::Limits;
use crate::matching::{enumerate_matchings, matching_polynomial, matching_radius};
use crate::poly::{common_interlacing, compare_roots, is_real_rooted, isolate_largest_root, AlgebraicRoot, IntPoly};

/// Signs `s_1, ..., s_k` for the first `k` cotree edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AssignmentPrefix {
    signs: Vec<i8>,
}

impl AssignmentPrefix {
    pub fn new(signs: Vec<i8>) -> Result<AssignmentPrefix> {
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::Mismatch(format!("sign {s} is not +1 or -1")));
        }
        Ok(AssignmentPrefix { signs })
    }

    pub fn empty() -> AssignmentPrefix {
        AssignmentPrefix::default()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn child(&self, s: i8) -> AssignmentPrefix {
        assert!(s.abs() == 1);
        let mut signs = self.signs.clone();
        signs.push(s);
        AssignmentPrefix { signs }
    }
}

impl fmt::Display for AssignmentPrefix {
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

/// How conditional sums are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SumMethod {
    /// Enumerate all completions.
    BruteForce,
    /// Expand over matchings of the unresolved cotree edges.
    #[default]
    Matching,
}

/// Exact outcome of comparing `lambda_max` against the matching radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "LT")]
    Lt,
    #[serde(rename = "EQ")]
    Eq,
    #[serde(rename = "GT")]
    Gt,
}

impl From<Ordering> for Verdict {
    fn from(o: Ordering) -> Verdict {
        match o {
            Ordering::Less => Verdict::Lt,
            Ordering::Equal => Verdict::Eq,
            Ordering::Greater => Verdict::Gt,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Lt => "LT",
            Verdict::Eq => "EQ",
            Verdict::Gt => "GT",
        })
    }
}

// cotree, positions of cotree edges in g.edges()
struct Setup {
    cotree: Vec<Edge>,
    pos: Vec<usize>,
}

fn setup(g: &Graph, t: &SpanningTree, prefix: &AssignmentPrefix) -> Result<Setup> {
    if !t.spans(g) {
        return Err(Error::Mismatch("tree is not a spanning tree of the graph".into()));
    }
    let cotree = cotree_edges(g, t);
    if prefix.len() > cotree.len() {
        return Err(Error::Mismatch(format!(
            "prefix of length {} but only {} cotree edges",
            prefix.len(),
            cotree.len()
        )));
    }
    let pos = cotree.iter().map(|&(u, v)| g.edge_index(u, v).expect("cotree edge")).collect();
    Ok(Setup { cotree, pos })
}

fn exponent(sign: i8) -> u8 {
    if sign > 0 {
        1
    } else {
        3
    }
}

fn brute_sum(g: &Graph, st: &Setup, prefix: &AssignmentPrefix) -> IntPoly {
    let k = prefix.len();
    let r = st.cotree.len() - k;
    let mut base = vec![0u8; g.edge_count()];
    for (j, &s) in prefix.signs().iter().enumerate() {
        base[st.pos[j]] = exponent(s);
    }
    (0..1usize << r)
        .into_par_iter()
        .map(|c| {
            let mut exps = base.clone();
            for j in 0..r {
                let plus = c >> (r - 1 - j) & 1 == 1;
                exps[st.pos[k + j]] = if plus { 1 } else { 3 };
            }
            charpoly_of_exponents(g.n(), g.edges(), &exps)
        })
        .reduce(IntPoly::zero, |a, b| &a + &b)
}

fn matching_sum(g: &Graph, st: &Setup, prefix: &AssignmentPrefix) -> IntPoly {
    let k = prefix.len();
    let unresolved = &st.cotree[k..];
    let mut exps = vec![0u8; g.edge_count()];
    for (j, &s) in prefix.signs().iter().enumerate() {
        exps[st.pos[j]] = exponent(s);
    }
    let dropped: Vec<usize> = st.pos[k..].to_vec();
    let fixed: Vec<(Edge, u8)> = g
        .edges()
        .iter()
        .zip(&exps)
        .enumerate()
        .filter(|(i, _)| !dropped.contains(i))
        .map(|(_, (&e, &x))| (e, x))
        .collect();
    let n = g.n();
    let total = enumerate_matchings(unresolved)
        .into_par_iter()
        .map(|m| {
            let mut gone = vec![false; n];
            for &j in &m {
                let (u, v) = unresolved[j];
                gone[u] = true;
                gone[v] = true;
            }
            let mut label = vec![usize::MAX; n];
            let mut kept = 0;
            for v in 0..n {
                if !gone[v] {
                    label[v] = kept;
                    kept += 1;
                }
            }
            let (edges, xs): (Vec<Edge>, Vec<u8>) = fixed
                .iter()
                .filter(|((u, v), _)| !gone[*u] && !gone[*v])
                .map(|&((u, v), x)| ((label[u], label[v]), x))
                .unzip();
            let p = charpoly_of_exponents(kept, &edges, &xs);
            if m.len() % 2 == 1 {
                -&p
            } else {
                p
            }
        })
        .reduce(IntPoly::zero, |a, b| &a + &b);
    total.scale(&(BigInt::from(1u8) << unresolved.len()))
}

/// Sum of `det(xI - H)` over all completions of `prefix`, by enumeration.
pub fn conditional_sum_charpoly(g: &Graph, t: &SpanningTree, prefix: &AssignmentPrefix) -> Result<IntPoly> {
    conditional_sum_charpoly_with(g, t, prefix, &Limits::default())
}

pub fn conditional_sum_charpoly_with(
    g: &Graph,
    t: &SpanningTree,
    prefix: &AssignmentPrefix,
    limits: &Limits,
) -> Result<IntPoly> {
    let st = setup(g, t, prefix)?;
    guard("cotree edges (enumerated sum)", st.cotree.len(), limits.brute_m)?;
    Ok(brute_sum(g, &st, prefix))
}

/// Same value as [`conditional_sum_charpoly`], computed as
/// `2^(m-k) * sum_M (-1)^|M| det(xI - H'[V - V(M)])` where `M` runs over the
/// matchings of the unresolved cotree edges and `H'` is the matrix with those
/// edges deleted. Off-diagonal `+-i` entries of an unresolved edge average to
/// zero unless the edge is used as a transposition.
pub fn conditional_sum_fast(g: &Graph, t: &SpanningTree, prefix: &AssignmentPrefix) -> Result<IntPoly> {
    conditional_sum_fast_with(g, t, prefix, &Limits::default())
}

pub fn conditional_sum_fast_with(
    g: &Graph,
    t: &SpanningTree,
    prefix: &AssignmentPrefix,
    limits: &Limits,
) -> Result<IntPoly> {
    let st = setup(g, t, prefix)?;
    guard("cotree edges (matching sum)", st.cotree.len(), limits.fast_m)?;
    Ok(matching_sum(g, &st, prefix))
}

fn conditional_sum(
    g: &Graph,
    t: &SpanningTree,
    prefix: &AssignmentPrefix,
    method: SumMethod,
    limits: &Limits,
) -> Result<IntPoly> {
    match method {
        SumMethod::BruteForce => conditional_sum_charpoly_with(g, t, prefix, limits),
        SumMethod::Matching => conditional_sum_fast_with(g, t, prefix, limits),
    }
}

/// Average of `det(xI - H)` over all `2^m` partial orientations.
///
/// Enumerates when `m` is within the enumeration guard, otherwise uses the
/// matching expansion. A remainder when dividing by `2^m` is a defect.
pub fn expected_charpoly(g: &Graph, t: &SpanningTree) -> Result<IntPoly> {
    expected_charpoly_with(g, t, &Limits::default())
}

pub fn expected_charpoly_with(g: &Graph, t: &SpanningTree, limits: &Limits) -> Result<IntPoly> {
    let empty = AssignmentPrefix::empty();
    let m = setup(g, t, &empty)?.cotree.len();
    let sum = if m <= limits.brute_m {
        conditional_sum_charpoly_with(g, t, &empty, limits)?
    } else {
        conditional_sum_fast_with(g, t, &empty, limits)?
    };
    sum.div_scalar_exact(&(BigInt::from(1u8) << m))
        .ok_or_else(|| Error::Defect(format!("sum {sum} is not divisible by 2^{m}")))
}

/// One step of the greedy descent.
#[derive(Debug, Clone, Serialize)]
pub struct LevelRecord {
    /// The cotree edge decided at this level.
    pub edge: Edge,
    pub plus_sum: IntPoly,
    pub minus_sum: IntPoly,
    pub plus_root: AlgebraicRoot,
    pub minus_root: AlgebraicRoot,
    pub chosen: i8,
}

/// Result of [`greedy_orientation`]: the chosen signs, the per-level trace,
/// and the exact comparison of `lambda_max` with the matching radius.
#[derive(Debug, Clone, Serialize)]
pub struct OrientationCertificate {
    pub graph: Graph,
    pub tree: SpanningTree,
    pub signs: SignVector,
    pub trace: Vec<LevelRecord>,
    pub charpoly: IntPoly,
    pub lambda_max: AlgebraicRoot,
    pub matching_polynomial: IntPoly,
    pub rho: AlgebraicRoot,
    pub verdict: Verdict,
}

impl OrientationCertificate {
    pub fn mixed(&self) -> MixedGraph {
        build_mixed(&self.graph, &self.tree, &self.signs).expect("certificate is consistent")
    }
}

/// Walks the sign tree from the root, at each level keeping the child whose
/// conditional sum has the smaller largest root (`+1` on ties).
pub fn greedy_orientation(g: &Graph, t: &SpanningTree) -> Result<OrientationCertificate> {
    greedy_orientation_with(g, t, SumMethod::default(), &Limits::default())
}

pub fn greedy_orientation_with(
    g: &Graph,
    t: &SpanningTree,
    method: SumMethod,
    limits: &Limits,
) -> Result<OrientationCertificate> {
    let mut prefix = AssignmentPrefix::empty();
    let st = setup(g, t, &prefix)?;
    match method {
        SumMethod::BruteForce => guard("cotree edges (enumerated sum)", st.cotree.len(), limits.brute_m)?,
        SumMethod::Matching => guard("cotree edges (matching sum)", st.cotree.len(), limits.fast_m)?,
    }
    let mut trace = Vec::with_capacity(st.cotree.len());
    for &edge in &st.cotree {
        let plus_sum = conditional_sum(g, t, &prefix.child(1), method, limits)?;
        let minus_sum = conditional_sum(g, t, &prefix.child(-1), method, limits)?;
        let plus_root = isolate_largest_root(&plus_sum)?;
        let minus_root = isolate_largest_root(&minus_sum)?;
        let chosen = if compare_roots(&plus_root, &minus_root) == Ordering::Greater { -1 } else { 1 };
        prefix = prefix.child(chosen);
        trace.push(LevelRecord { edge, plus_sum, minus_sum, plus_root, minus_root, chosen });
    }
    let signs = SignVector::new(st.cotree, prefix.signs)?;
    let charpoly = crate::hermitian::charpoly(&build_mixed(g, t, &signs)?);
    let lambda_max = largest_eigenvalue(&charpoly);
    let matching_polynomial = matching_polynomial(g);
    let rho = matching_radius(g);
    let verdict = Verdict::from(compare_roots(&lambda_max, &rho));
    if verdict == Verdict::Gt {
        return Err(Error::Defect(format!(
            "greedy orientation {signs} has lambda_max {lambda_max} above matching radius {rho}"
        )));
    }
    Ok(OrientationCertificate { graph: g.clone(), tree: t.clone(), signs, trace, charpoly, lambda_max, matching_polynomial, rho, verdict })
}

/// Exact comparison of `lambda_max(H(G_T^s))` with the matching radius.
pub fn verify_bound(g: &Graph, t: &SpanningTree, s: &SignVector) -> Result<Verdict> {
    let p = crate::hermitian::charpoly(&build_mixed(g, t, s)?);
    Ok(compare_roots(&largest_eigenvalue(&p), &matching_radius(g)).into())
}

/// Which check failed at a node of the sign tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AuditCheck {
    RealRooted,
    CommonInterlacing,
    ChildBelowParent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditViolation {
    pub prefix: AssignmentPrefix,
    pub check: AuditCheck,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub m: usize,
    /// Nodes of the sign tree examined (`2^(m+1) - 1`).
    pub nodes: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every node of the sign tree: the conditional sum is real-rooted,
/// the two children have a common interlacing, and the smaller of the
/// children's largest roots is at most the parent's largest root.
pub fn audit_interlacing_family(g: &Graph, t: &SpanningTree) -> Result<AuditReport> {
    audit_interlacing_family_with(g, t, &Limits::default())
}

pub fn audit_interlacing_family_with(g: &Graph, t: &SpanningTree, limits: &Limits) -> Result<AuditReport> {
    let empty = AssignmentPrefix::empty();
    let st = setup(g, t, &empty)?;
    let m = st.cotree.len();
    guard("cotree edges (audit)", m, limits.audit_m)?;
    // levels[k][i]: sum below the prefix of length k with lexicographic index i
    let leaves: Vec<IntPoly> = (0..1usize << m)
        .into_par_iter()
        .map(|i| {
            let signs = SignVector::from_index(st.cotree.clone(), i as u64);
            let exps: Vec<u8> = {
                let mut e = vec![0u8; g.edge_count()];
                for (j, &s) in signs.signs().iter().enumerate() {
                    e[st.pos[j]] = exponent(s);
                }
                e
            };
            charpoly_of_exponents(g.n(), g.edges(), &exps)
        })
        .collect();
    let mut levels = vec![leaves];
    for _ in 0..m {
        let below = levels.last().expect("nonempty");
        let up: Vec<IntPoly> = below.chunks(2).map(|c| &c[0] + &c[1]).collect();
        levels.push(up);
    }
    levels.reverse();

    let prefix_of = |k: usize, i: usize| {
        let signs = (0..k).map(|j| if i >> (k - 1 - j) & 1 == 1 { 1 } else { -1 }).collect();
        AssignmentPrefix { signs }
    };
    let mut violations = Vec::new();
    let mut nodes = 0;
    for k in 0..=m {
        for (i, f) in levels[k].iter().enumerate() {
            nodes += 1;
            if !is_real_rooted(f)? {
                violations.push(AuditViolation { prefix: prefix_of(k, i), check: AuditCheck::RealRooted });
                continue;
            }
            if k == m {
                continue;
            }
            let (minus, plus) = (&levels[k + 1][2 * i], &levels[k + 1][2 * i + 1]);
            if !is_real_rooted(minus)? || !is_real_rooted(plus)? {
                // reported at the child's own node
                continue;
            }
            if !common_interlacing(plus, minus)? {
                violations.push(AuditViolation { prefix: prefix_of(k, i), check: AuditCheck::CommonInterlacing });
            }
            let parent = isolate_largest_root(f)?;
            let lo = std::cmp::min(isolate_largest_root(plus)?, isolate_largest_root(minus)?);
            if compare_roots(&lo, &parent) == Ordering::Greater {
                violations.push(AuditViolation { prefix: prefix_of(k, i), check: AuditCheck::ChildBelowParent });
            }
        }
    }
    Ok(AuditReport { m, nodes, violations })
}
