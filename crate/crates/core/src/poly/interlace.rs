use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed};

use super::root::isolate_all;
use super::{compare_roots, AlgebraicRoot, IntPoly, SturmChain};
use crate::error::{Error, Result};

/// Whether every root of `p` is real.
///
/// The square-free part has only simple roots, so `p` is real-rooted exactly
/// when the Sturm count of the square-free part equals its degree.
pub fn is_real_rooted(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free_part();
    let d = sf.degree().unwrap();
    Ok(d == 0 || SturmChain::new(&sf).count_real() == d)
}

/// All real roots of `p` in ascending order, repeated by multiplicity.
pub fn real_roots(p: &IntPoly) -> Result<Vec<AlgebraicRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        let chain = SturmChain::new(&factor);
        for r in isolate_all(&chain) {
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    // factors are coprime, so no two distinct entries compare equal
    roots.sort_by(compare_roots);
    Ok(roots)
}

fn real_roots_checked(p: &IntPoly) -> Result<Vec<AlgebraicRoot>> {
    let roots = real_roots(p)?;
    if roots.len() != p.degree().unwrap() {
        return Err(Error::NotRealRooted(p.to_string()));
    }
    Ok(roots)
}

/// Roots of a real-rooted `p` with multiplicity, ascending, each within `eps`.
pub fn roots_numeric(p: &IntPoly, eps: f64) -> Result<Vec<f64>> {
    let eps = BigRational::from_f64(eps)
        .filter(Signed::is_positive)
        .ok_or_else(|| Error::Precondition(format!("eps must be positive, got {eps}")))?;
    Ok(real_roots_checked(p)?
        .into_iter()
        .map(|mut r| {
            r.refine_to(&eps);
            super::rational_to_f64(&((r.lo() + r.hi()) / BigRational::from_integer(BigInt::from(2))))
        })
        .collect())
}

fn le(a: &AlgebraicRoot, b: &AlgebraicRoot) -> bool {
    compare_roots(a, b) != Ordering::Greater
}

/// Whether `g` interlaces `f`: with roots `beta` of `f` and `alpha` of `g`,
/// `beta_1 <= alpha_1 <= beta_2 <= ... <= alpha_{n-1} <= beta_n` (weak inequalities).
pub fn interlaces(g: &IntPoly, f: &IntPoly) -> Result<bool> {
    let (dg, df) = (g.degree(), f.degree());
    match (dg, df) {
        (Some(dg), Some(df)) if dg + 1 == df => {}
        _ => {
            return Err(Error::Precondition(format!(
                "interlacer degree must be one less: deg {g} vs deg {f}"
            )))
        }
    }
    let alpha = real_roots_checked(g)?;
    let beta = real_roots_checked(f)?;
    Ok(alpha
        .iter()
        .enumerate()
        .all(|(j, a)| le(&beta[j], a) && le(a, &beta[j + 1])))
}

/// Whether `f` and `g` (same degree, positive leading coefficients, real-rooted)
/// have a common interlacing: with sorted roots `beta`, `gamma`,
/// `max(beta_i, gamma_i) <= min(beta_{i+1}, gamma_{i+1})` for every `i`.
pub fn common_interlacing(f: &IntPoly, g: &IntPoly) -> Result<bool> {
    if f.degree().is_none() || f.degree() != g.degree() {
        return Err(Error::Precondition(format!(
            "common interlacing needs equal degrees: {f} vs {g}"
        )));
    }
    if !f.leading().unwrap().is_positive() || !g.leading().unwrap().is_positive() {
        return Err(Error::Precondition(
            "common interlacing needs positive leading coefficients".into(),
        ));
    }
    let beta = real_roots_checked(f)?;
    let gamma = real_roots_checked(g)?;
    Ok((0..beta.len().saturating_sub(1)).all(|i| {
        let lower = if le(&beta[i], &gamma[i]) { &gamma[i] } else { &beta[i] };
        let upper = if le(&beta[i + 1], &gamma[i + 1]) { &beta[i + 1] } else { &gamma[i + 1] };
        le(lower, upper)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn real_rootedness() {
        assert!(is_real_rooted(&p(&[-1, 0, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
        assert!(is_real_rooted(&p(&[2, 2, -5, 0, 1])).unwrap());
        assert!(is_real_rooted(&p(&[0, 0, 0, 1])).unwrap());
        assert!(is_real_rooted(&p(&[7])).unwrap());
        // (x^2+1)^2 x: repeated complex pair
        let f = &(&p(&[1, 0, 1]) * &p(&[1, 0, 1])) * &p(&[0, 1]);
        assert!(!is_real_rooted(&f).unwrap());
        assert_eq!(is_real_rooted(&p(&[])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn numeric_roots() {
        assert_eq!(roots_numeric(&p(&[4, 0, -5, 0, 1]), 1e-9).unwrap(), vec![-2.0, -1.0, 1.0, 2.0]);
        assert_eq!(roots_numeric(&p(&[0, 0, -4, 0, 1]), 1e-9).unwrap(), vec![-2.0, 0.0, 0.0, 2.0]);
        assert_eq!(roots_numeric(&p(&[0, 0, 0, 1]), 1e-9).unwrap(), vec![0.0; 3]);
        assert!(matches!(roots_numeric(&p(&[1, 0, 1]), 1e-9), Err(Error::NotRealRooted(_))));
        let r = roots_numeric(&p(&[2, 2, -5, 0, 1]), 1e-6).unwrap();
        assert!((r[3] - 1.814).abs() < 1e-3 && (r[0] + 2.343).abs() < 1e-3);
    }

    #[test]
    fn interlacing_pairs() {
        assert!(interlaces(&p(&[0, 1]), &p(&[-1, 0, 1])).unwrap());
        assert!(!interlaces(&p(&[-2, 1]), &p(&[-1, 0, 1])).unwrap());
        let f = p(&[2, 0, -4, 0, 1]);
        assert!(interlaces(&f.derivative(), &f).unwrap());
        assert!(interlaces(&p(&[1, 1]), &p(&[0, 1])).is_err());
        // weak inequality: shared root allowed
        assert!(interlaces(&p(&[-1, 1]), &p(&[1, 0, -1]).reflect()).unwrap());
    }

    #[test]
    fn common_interlacing_pairs() {
        assert!(common_interlacing(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap());
        let f = &p(&[-1, 1]) * &p(&[-2, 1]);
        let g = &p(&[-4, 1]) * &p(&[-5, 1]);
        assert!(!common_interlacing(&f, &g).unwrap());
        assert!(common_interlacing(&f, &f).unwrap());
        assert!(common_interlacing(&p(&[0, 1]), &p(&[-9, 1])).unwrap());
        assert!(common_interlacing(&p(&[0, 1]), &p(&[0, 0, 1])).is_err());
        assert!(common_interlacing(&p(&[0, -1]), &p(&[0, -1])).is_err());
    }
}
