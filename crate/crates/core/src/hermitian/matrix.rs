use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::GaussInt;
use crate::error::{Error, Result};
use crate::graph::{EdgeState, MixedGraph};
use crate::poly::IntPoly;

/// A square Hermitian matrix over the Gaussian integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<GaussInt>,
}

impl HermitianMatrix {
    /// Checks `entries[v][u] == conj(entries[u][v])`.
    pub fn new(n: usize, entries: Vec<GaussInt>) -> Result<HermitianMatrix> {
        if entries.len() != n * n {
            return Err(Error::Mismatch(format!("{} entries for order {n}", entries.len())));
        }
        for u in 0..n {
            for v in u..n {
                if entries[v * n + u] != entries[u * n + v].conj() {
                    return Err(Error::Precondition(format!("not Hermitian at ({u}, {v})")));
                }
            }
        }
        Ok(HermitianMatrix { n, entries })
    }

    pub fn zero(n: usize) -> HermitianMatrix {
        HermitianMatrix {
            n,
            entries: vec![GaussInt::zero(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &GaussInt {
        &self.entries[u * self.n + v]
    }

    /// Sets `(u, v)` to `z` and `(v, u)` to its conjugate.
    fn set_pair(&mut self, u: usize, v: usize, z: GaussInt) {
        self.entries[v * self.n + u] = z.conj();
        self.entries[u * self.n + v] = z;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussInt]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    /// Principal submatrix on the given (ascending) index set.
    pub fn principal_submatrix(&self, keep: &[usize]) -> HermitianMatrix {
        let entries = keep
            .iter()
            .flat_map(|&u| keep.iter().map(move |&v| self.get(u, v).clone()))
            .collect();
        HermitianMatrix {
            n: keep.len(),
            entries,
        }
    }

    /// Whether this is the Hermitian adjacency matrix of some mixed graph:
    /// zero diagonal, off-diagonal entries in `{0, 1, i, -i}`.
    pub fn is_mixed_adjacency(&self) -> bool {
        (0..self.n).all(|u| {
            (0..self.n).all(|v| {
                let z = self.get(u, v);
                if u == v {
                    z.is_zero()
                } else {
                    z.is_zero() || matches!(z.unit_exponent(), Some(0 | 1 | 3))
                }
            })
        })
    }

    /// `det(xI - H)`, exact.
    ///
    /// Faddeev-LeVerrier: `M_1 = I`, `c_{n-k} = -tr(H M_k) / k`,
    /// `M_{k+1} = H M_k + c_{n-k} I`. Every division by `k` is exact in Z[i]
    /// and, `H` being Hermitian, every coefficient is a real integer; both
    /// facts are asserted.
    pub fn charpoly(&self) -> IntPoly {
        if let Some(p) = self.charpoly_small() {
            return p;
        }
        self.charpoly_big()
    }

    fn charpoly_big(&self) -> IntPoly {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        let mut m = identity(n);
        for k in 1..=n {
            let hm = mat_mul(&self.entries, &m, n);
            let trace = (0..n).fold(GaussInt::zero(), |acc, i| &acc + &hm[i * n + i]);
            let c = (-&trace)
                .div_exact(&GaussInt::new(k as i64, 0))
                .expect("Faddeev-LeVerrier division is exact");
            assert!(c.is_real(), "Hermitian charpoly coefficient has imaginary part");
            coeffs[n - k] = c.re.clone();
            if k < n {
                m = hm;
                for i in 0..n {
                    m[i * n + i] = &m[i * n + i] + &c;
                }
            }
        }
        IntPoly::new(coeffs)
    }

    /// Same recurrence in checked `i128`; `None` on overflow.
    fn charpoly_small(&self) -> Option<IntPoly> {
        let h: Vec<(i128, i128)> = self
            .entries
            .iter()
            .map(|z| Some((z.re.to_i128()?, z.im.to_i128()?)))
            .collect::<Option<_>>()?;
        faddeev_small(self.n, &h)
    }

    /// `[re, im]` pairs, row by row.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl Serialize for HermitianMatrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

fn faddeev_small(n: usize, h: &[(i128, i128)]) -> Option<IntPoly> {
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![(0i128, 0i128); n * n];
    for i in 0..n {
        m[i * n + i] = (1, 0);
    }
    let mut hm = vec![(0i128, 0i128); n * n];
    for k in 1..=n {
        hm.iter_mut().for_each(|e| *e = (0, 0));
        for i in 0..n {
            for l in 0..n {
                let a = h[i * n + l];
                if a == (0, 0) {
                    continue;
                }
                for j in 0..n {
                    let b = m[l * n + j];
                    let re = a.0.checked_mul(b.0)?.checked_sub(a.1.checked_mul(b.1)?)?;
                    let im = a.0.checked_mul(b.1)?.checked_add(a.1.checked_mul(b.0)?)?;
                    let e = &mut hm[i * n + j];
                    e.0 = e.0.checked_add(re)?;
                    e.1 = e.1.checked_add(im)?;
                }
            }
        }
        let (mut tr, mut ti) = (0i128, 0i128);
        for i in 0..n {
            tr = tr.checked_add(hm[i * n + i].0)?;
            ti = ti.checked_add(hm[i * n + i].1)?;
        }
        let k = k as i128;
        assert!(tr % k == 0 && ti % k == 0, "Faddeev-LeVerrier division is exact");
        assert!(ti == 0, "Hermitian charpoly coefficient has imaginary part");
        let c = -(tr / k);
        coeffs[n - k as usize] = c;
        if (k as usize) < n {
            std::mem::swap(&mut m, &mut hm);
            for i in 0..n {
                m[i * n + i].0 = m[i * n + i].0.checked_add(c)?;
            }
        }
    }
    Some(IntPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
}

/// Charpoly of the mixed graph on `n` vertices whose edge `(u, v)`, `u < v`,
/// carries `h_uv = i^e`. Skips building a [`MixedGraph`]; used by the inner
/// loops of the orientation sums.
pub(crate) fn charpoly_of_exponents(n: usize, edges: &[(usize, usize)], exps: &[u8]) -> IntPoly {
    let mut h = vec![(0i128, 0i128); n * n];
    for (&(u, v), &e) in edges.iter().zip(exps) {
        let z = match e % 4 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        h[u * n + v] = z;
        h[v * n + u] = (z.0, -z.1);
    }
    if let Some(p) = faddeev_small(n, &h) {
        return p;
    }
    let entries = h.iter().map(|&(re, im)| GaussInt::new(re as i64, im as i64)).collect();
    HermitianMatrix { n, entries }.charpoly_big()
}

fn identity(n: usize) -> Vec<GaussInt> {
    let mut m = vec![GaussInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = GaussInt::one();
    }
    m
}

fn mat_mul(a: &[GaussInt], b: &[GaussInt], n: usize) -> Vec<GaussInt> {
    let mut out = vec![GaussInt::zero(); n * n];
    for i in 0..n {
        for l in 0..n {
            let x = &a[i * n + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[l * n + j];
                if !y.is_zero() {
                    out[i * n + j] = &out[i * n + j] + &(x * y);
                }
            }
        }
    }
    out
}

/// `h_uv = 1` on undirected edges, `h_uv = i`, `h_vu = -i` on an arc `u -> v`.
pub fn hermitian_adjacency(d: &MixedGraph) -> HermitianMatrix {
    let mut h = HermitianMatrix::zero(d.n());
    for (&(u, v), st) in d.graph().edges().iter().zip(d.states()) {
        match *st {
            EdgeState::Undirected => h.set_pair(u, v, GaussInt::one()),
            EdgeState::Arc { tail, head } => h.set_pair(tail, head, GaussInt::i()),
        }
    }
    h
}

/// `det(xI - H)` of the mixed graph's Hermitian adjacency matrix.
pub fn charpoly(d: &MixedGraph) -> IntPoly {
    hermitian_adjacency(d).charpoly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_mixed, Graph};

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn adjacency_entries() {
        let h = hermitian_adjacency(&parse_mixed("0 1").unwrap());
        assert_eq!(h.get(0, 1), &gi(1, 0));
        let h = hermitian_adjacency(&parse_mixed("0 > 1").unwrap());
        assert_eq!(h.get(0, 1), &gi(0, 1));
        assert_eq!(h.get(1, 0), &gi(0, -1));
        assert_eq!(serde_json::to_string(&h).unwrap(), "[[[0,0],[0,1]],[[0,-1],[0,0]]]");
        let h = hermitian_adjacency(&MixedGraph::undirected(Graph::empty(3)));
        assert_eq!(h, HermitianMatrix::zero(3));
        assert!(h.is_mixed_adjacency());
    }

    #[test]
    fn charpolys() {
        assert_eq!(charpoly(&parse_mixed("0 > 1").unwrap()), IntPoly::from_i64(&[-1, 0, 1]));
        let h1 = parse_mixed("0 1\n1 2\n2 3\n0 > 3").unwrap();
        assert_eq!(charpoly(&h1), IntPoly::from_i64(&[2, 0, -4, 0, 1]));
        let c4 = MixedGraph::undirected(Graph::cycle(4));
        assert_eq!(charpoly(&c4), IntPoly::from_i64(&[0, 0, -4, 0, 1]));
        assert_eq!(charpoly(&MixedGraph::undirected(Graph::empty(0))), IntPoly::from_i64(&[1]));
    }

    #[test]
    fn big_and_small_paths_agree() {
        let h = hermitian_adjacency(&parse_mixed("0 1\n1 > 2\n2 3\n3 > 0\n0 2\n1 > 3\n3 4").unwrap());
        assert_eq!(h.charpoly_small().unwrap(), h.charpoly_big());
        let big = HermitianMatrix::new(
            2,
            vec![gi(0, 0), GaussInt::new(BigInt::from(1u8) << 80usize, BigInt::zero()), GaussInt::new(BigInt::from(1u8) << 80usize, BigInt::zero()), gi(0, 0)],
        )
        .unwrap();
        assert!(big.charpoly_small().is_none());
        assert_eq!(big.charpoly().coeff(0), -(BigInt::from(1u8) << 160usize));
    }

    #[test]
    fn rejects_non_hermitian() {
        assert!(HermitianMatrix::new(2, vec![gi(0, 0), gi(0, 1), gi(0, 1), gi(0, 0)]).is_err());
        assert!(HermitianMatrix::new(2, vec![gi(0, 0)]).is_err());
    }
}
