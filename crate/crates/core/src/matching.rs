//! Matching counts and the matching polynomial.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};
use crate::json_int::JsonInt;
use crate::poly::{isolate_largest_root, AlgebraicRoot, IntPoly};

/// `m_0, m_1, ..., m_{n/2}`: number of matchings with `k` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingProfile {
    counts: Vec<BigInt>,
}

impl MatchingProfile {
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn get(&self, k: usize) -> BigInt {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// Total number of matchings (Hosoya index).
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// `sum_k (-1)^k m_k x^{n-2k}`.
    pub fn polynomial(&self, n: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); n + 1];
        for (k, m) in self.counts.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            c[n - 2 * k] = if k % 2 == 0 { m.clone() } else { -m };
        }
        IntPoly::new(c)
    }
}

impl Serialize for MatchingProfile {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<JsonInt> = self.counts.iter().cloned().map(JsonInt).collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MatchingProfile {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<JsonInt>::deserialize(de)?;
        Ok(MatchingProfile { counts: v.into_iter().map(|x| x.0).collect() })
    }
}

type Memo = HashMap<Vec<Edge>, Vec<BigInt>>;

// m_k(G) = m_k(G - e) + m_{k-1}(G - u - v), e the smallest remaining edge
fn counts_rec(edges: &[Edge], memo: &mut Memo) -> Vec<BigInt> {
    if edges.is_empty() {
        return vec![BigInt::one()];
    }
    if edges.len() == 1 {
        return vec![BigInt::one(), BigInt::one()];
    }
    if let Some(c) = memo.get(edges) {
        return c.clone();
    }
    let (u, v) = edges[0];
    let rest = &edges[1..];
    let without: Vec<Edge> = rest
        .iter()
        .copied()
        .filter(|&(a, b)| a != u && a != v && b != u && b != v)
        .collect();
    let mut out = counts_rec(rest, memo);
    let sub = counts_rec(&without, memo);
    if out.len() < sub.len() + 1 {
        out.resize(sub.len() + 1, BigInt::zero());
    }
    for (k, c) in sub.into_iter().enumerate() {
        out[k + 1] += c;
    }
    memo.insert(edges.to_vec(), out.clone());
    out
}

/// Matching counts of an arbitrary edge list (edges given as `(u, v)`, `u < v`,
/// sorted).
pub(crate) fn matching_counts_of(edges: &[Edge]) -> Vec<BigInt> {
    let mut memo = Memo::new();
    counts_rec(edges, &mut memo)
}

pub fn matching_counts(g: &Graph) -> MatchingProfile {
    let mut counts = matching_counts_of(g.edges());
    counts.resize(g.n() / 2 + 1, BigInt::zero());
    MatchingProfile { counts }
}

pub fn matching_polynomial(g: &Graph) -> IntPoly {
    matching_counts(g).polynomial(g.n())
}

/// Largest root of the matching polynomial. Roots are symmetric about zero,
/// so this is also the largest root modulus.
pub fn matching_radius(g: &Graph) -> AlgebraicRoot {
    assert!(g.n() > 0, "matching radius of the empty graph");
    let mu = matching_polynomial(g);
    assert!(mu.has_symmetric_roots(), "matching polynomial {mu} is not symmetric");
    isolate_largest_root(&mu).expect("matching polynomial is real-rooted")
}

/// Every matching of `edges` as a list of edge indices, in the order
/// produced by include/exclude recursion on ascending index.
pub(crate) fn enumerate_matchings(edges: &[Edge]) -> Vec<Vec<usize>> {
    fn rec(edges: &[Edge], i: usize, used: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == edges.len() {
            out.push(cur.clone());
            return;
        }
        rec(edges, i + 1, used, cur, out);
        let (u, v) = edges[i];
        if !used.contains(&u) && !used.contains(&v) {
            used.extend([u, v]);
            cur.push(i);
            rec(edges, i + 1, used, cur, out);
            cur.pop();
            used.truncate(used.len() - 2);
        }
    }
    let mut out = Vec::new();
    rec(edges, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn chorded_c4() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n0 3\n1 3").unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(matching_counts(&Graph::path(3)).counts(), &ints(&[1, 2])[..]);
        assert_eq!(matching_counts(&chorded_c4()).counts(), &ints(&[1, 5, 2])[..]);
        assert_eq!(matching_counts(&Graph::cycle(4)).counts(), &ints(&[1, 4, 2])[..]);
        // K6: 1, 15, 45, 15
        assert_eq!(matching_counts(&Graph::complete(6)).counts(), &ints(&[1, 15, 45, 15])[..]);
        assert_eq!(matching_counts(&Graph::empty(5)).counts(), &ints(&[1, 0, 0])[..]);
    }

    #[test]
    fn polynomials() {
        assert_eq!(matching_polynomial(&chorded_c4()), IntPoly::from_i64(&[2, 0, -5, 0, 1]));
        assert_eq!(matching_polynomial(&Graph::cycle(4)), IntPoly::from_i64(&[2, 0, -4, 0, 1]));
        assert_eq!(matching_polynomial(&Graph::empty(3)), IntPoly::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn radius() {
        let k2 = Graph::path(2);
        assert_eq!(matching_radius(&k2).exact_value().unwrap(), &num_rational::BigRational::from_integer(1.into()));
        assert!((matching_radius(&chorded_c4()).approx() - 2.1358).abs() < 1e-4);
        assert!((matching_radius(&Graph::cycle(4)).approx() - 1.8478).abs() < 1e-4);
        assert_eq!(matching_radius(&Graph::empty(1)).approx(), 0.0);
    }

    #[test]
    fn enumeration_counts_agree() {
        let g = Graph::complete(5);
        let all = enumerate_matchings(g.edges());
        let mut by_size = vec![0i64; 3];
        for m in &all {
            by_size[m.len()] += 1;
        }
        assert_eq!(ints(&by_size), matching_counts(&g).counts().to_vec());
    }

    #[test]
    fn json() {
        let p = matching_counts(&chorded_c4());
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[1,5,2]");
        assert_eq!(serde_json::from_str::<MatchingProfile>(&s).unwrap(), p);
    }
}
