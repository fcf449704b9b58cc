use num_traits::ToPrimitive;

use super::HermitianMatrix;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix (row-major, order `n`) by cyclic
/// Jacobi rotations, ascending. Stops once the off-diagonal Frobenius norm
/// drops below `tol`.
pub fn jacobi_symmetric(mut a: Vec<f64>, n: usize, tol: f64) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// The `n` eigenvalues of `h`, ascending, via the real symmetric embedding
/// `[[Re H, -Im H], [Im H, Re H]]`, whose spectrum is that of `h` with every
/// multiplicity doubled.
pub fn eigenvalues_numeric(h: &HermitianMatrix, eps: f64) -> Vec<f64> {
    let n = h.n();
    if n == 0 {
        return Vec::new();
    }
    let m = 2 * n;
    let mut a = vec![0.0; m * m];
    for u in 0..n {
        for v in 0..n {
            let z = h.get(u, v);
            let re = z.re.to_f64().expect("finite entry");
            let im = z.im.to_f64().expect("finite entry");
            a[u * m + v] = re;
            a[(u + n) * m + v + n] = re;
            a[u * m + v + n] = -im;
            a[(u + n) * m + v] = im;
        }
    }
    let tol = (eps / n as f64).max(1e-14);
    let doubled = jacobi_symmetric(a, m, tol);
    let out: Vec<f64> = doubled.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect();
    let slack = 10.0 * eps.max(1e-12);
    assert!(
        doubled.chunks(2).all(|p| (p[1] - p[0]).abs() <= slack),
        "embedded spectrum did not pair up: {doubled:?}"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_mixed, Graph, MixedGraph};
    use crate::hermitian::hermitian_adjacency;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn c4_spectrum() {
        let h = hermitian_adjacency(&MixedGraph::undirected(Graph::cycle(4)));
        assert!(close(&eigenvalues_numeric(&h, 1e-10), &[-2.0, 0.0, 0.0, 2.0], 1e-9));
    }

    #[test]
    fn mixed_examples() {
        // x^4 - 5x^2 + 2x + 2 on the 4-cycle with chord {1,3}
        let d1 = parse_mixed("0 1\n1 2\n2 3\n0 > 3\n3 > 1").unwrap();
        let ev = eigenvalues_numeric(&hermitian_adjacency(&d1), 1e-10);
        let p = crate::hermitian::charpoly(&d1);
        assert_eq!(p, crate::poly::IntPoly::from_i64(&[2, 2, -5, 0, 1]));
        assert!((ev[3] - 1.814).abs() < 1e-3, "{ev:?}");
        assert!((ev[0] + 2.343).abs() < 1e-3, "{ev:?}");
        // two consecutive arcs on C4: cycle weight -1, x^4 - 4x^2 + 4
        let h2 = parse_mixed("0 > 1\n1 > 2\n2 3\n0 3").unwrap();
        assert_eq!(crate::hermitian::charpoly(&h2), crate::poly::IntPoly::from_i64(&[4, 0, -4, 0, 1]));
        let ev = eigenvalues_numeric(&hermitian_adjacency(&h2), 1e-10);
        assert!(close(&ev, &[-2f64.sqrt(), -2f64.sqrt(), 2f64.sqrt(), 2f64.sqrt()], 1e-9), "{ev:?}");
        // directed 4-cycle has weight i^4 = 1, same spectrum as undirected
        let dc = parse_mixed("0 > 1\n1 > 2\n2 > 3\n3 > 0").unwrap();
        let ev = eigenvalues_numeric(&hermitian_adjacency(&dc), 1e-10);
        assert!(close(&ev, &[-2.0, 0.0, 0.0, 2.0], 1e-9), "{ev:?}");
    }
}
