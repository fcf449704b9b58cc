use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{hermitian_adjacency, GaussInt, HermitianMatrix};
use crate::error::Result;
use crate::graph::{build_mixed, Graph, SignVector, SpanningTree};
use crate::poly::IntPoly;

/// The pieces of the decomposition `D - H = J_T + sum_{j in S} a_j a_j^* + sum_{j not in S} b_j b_j^*`
/// for one partial orientation.
///
/// `J_T` is the Laplacian of the tree (a sum of `(e_u - e_v)(e_u - e_v)^T`),
/// `a_j = e_{u_j} + i e_{v_j}`, `b_j = e_{u_j} - i e_{v_j}` for cotree edge
/// `(u_j, v_j)`, and `S` holds the indices with sign `+1`.
#[derive(Debug, Clone)]
pub struct RankOneWitness {
    pub n: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    /// Row-major `J_T`.
    pub tree_laplacian: Vec<BigInt>,
    pub a: Vec<Vec<GaussInt>>,
    pub b: Vec<Vec<GaussInt>>,
    pub plus: Vec<bool>,
}

impl RankOneWitness {
    pub fn new(g: &Graph, t: &SpanningTree, s: &SignVector) -> Result<RankOneWitness> {
        // validates consistency of (g, t, s)
        build_mixed(g, t, s)?;
        let n = g.n();
        let mut lap = vec![BigInt::zero(); n * n];
        for &(u, v) in t.edges() {
            for (x, y, w) in [(u, u, 1), (v, v, 1), (u, v, -1), (v, u, -1)] {
                lap[x * n + y] += w;
            }
        }
        let unit = |u: usize, v: usize, im: i64| {
            let mut vec = vec![GaussInt::zero(); n];
            vec[u] = GaussInt::one();
            vec[v] = GaussInt::new(0, im);
            vec
        };
        let a = s.cotree().iter().map(|&(u, v)| unit(u, v, 1)).collect();
        let b = s.cotree().iter().map(|&(u, v)| unit(u, v, -1)).collect();
        let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        Ok(RankOneWitness {
            n,
            max_degree: g.max_degree(),
            degrees,
            tree_laplacian: lap,
            a,
            b,
            plus: s.signs().iter().map(|&x| x > 0).collect(),
        })
    }

    /// `J_T + sum_{S} a a^* + sum_{not S} b b^*`, row-major.
    pub fn gram_sum(&self) -> Vec<GaussInt> {
        let n = self.n;
        let mut out: Vec<GaussInt> = self
            .tree_laplacian
            .iter()
            .map(|x| GaussInt::new(x.clone(), 0))
            .collect();
        for (j, &plus) in self.plus.iter().enumerate() {
            let vec = if plus { &self.a[j] } else { &self.b[j] };
            for r in 0..n {
                for c in 0..n {
                    let term = &vec[r] * &vec[c].conj();
                    if !term.is_zero() {
                        out[r * n + c] = &out[r * n + c] + &term;
                    }
                }
            }
        }
        out
    }

    /// `Delta I - D + J_T`.
    pub fn shifted_tree_laplacian(&self) -> HermitianMatrix {
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| {
                let (r, c) = (k / n, k % n);
                let mut x = self.tree_laplacian[k].clone();
                if r == c {
                    x += BigInt::from(self.max_degree) - BigInt::from(self.degrees[r]);
                }
                GaussInt::new(x, 0)
            })
            .collect();
        HermitianMatrix::new(n, entries).expect("symmetric by construction")
    }
}

/// Outcome of [`verify_rank_one_identity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankOneOutcome {
    Holds,
    /// First entry where the two sides differ.
    EntryMismatch {
        row: usize,
        col: usize,
        gram: GaussInt,
        degree_minus_adjacency: GaussInt,
    },
    /// `Delta I - D + J_T` has a negative eigenvalue.
    ShiftNotPositiveSemidefinite,
}

impl RankOneOutcome {
    pub fn holds(&self) -> bool {
        *self == RankOneOutcome::Holds
    }
}

/// A real-rooted monic `det(xI - M)` has only nonnegative roots exactly when
/// its coefficients alternate in sign.
pub fn is_positive_semidefinite(m: &HermitianMatrix) -> bool {
    let p: IntPoly = m.charpoly();
    let n = m.n();
    p.coeffs().iter().enumerate().all(|(k, c)| {
        if (n - k).is_multiple_of(2) {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    })
}

/// Checks the rank-one decomposition of `D - H(G_T^sigma)` entry by entry,
/// and that `Delta I - D + J_T` is positive semidefinite.
pub fn verify_rank_one_identity(g: &Graph, t: &SpanningTree, s: &SignVector) -> Result<RankOneOutcome> {
    let w = RankOneWitness::new(g, t, s)?;
    let h = hermitian_adjacency(&build_mixed(g, t, s)?);
    let gram = w.gram_sum();
    let n = g.n();
    for r in 0..n {
        for c in 0..n {
            let mut rhs = -h.get(r, c);
            if r == c {
                rhs = &rhs + &GaussInt::new(w.degrees[r] as i64, 0);
            }
            if gram[r * n + c] != rhs {
                return Ok(RankOneOutcome::EntryMismatch {
                    row: r,
                    col: c,
                    gram: gram[r * n + c].clone(),
                    degree_minus_adjacency: rhs,
                });
            }
        }
    }
    if !is_positive_semidefinite(&w.shifted_tree_laplacian()) {
        return Ok(RankOneOutcome::ShiftNotPositiveSemidefinite);
    }
    Ok(RankOneOutcome::Holds)
}
