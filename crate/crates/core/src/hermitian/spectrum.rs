use super::HermitianMatrix;
use crate::poly::{isolate_largest_root, AlgebraicRoot, IntPoly};

fn expect_real(p: &IntPoly) -> AlgebraicRoot {
    isolate_largest_root(p).expect("characteristic polynomial of a Hermitian matrix of order >= 1")
}

/// Largest root of a characteristic polynomial (degree >= 1, real-rooted).
pub fn largest_eigenvalue(p: &IntPoly) -> AlgebraicRoot {
    expect_real(p)
}

/// Smallest root, as the negated largest root of `p(-x)`.
pub fn smallest_eigenvalue(p: &IntPoly) -> AlgebraicRoot {
    expect_real(&p.reflect()).neg()
}

/// `max(lambda_max, -lambda_min)`, decided exactly.
pub fn spectral_radius_of(p: &IntPoly) -> AlgebraicRoot {
    AlgebraicRoot::max_of(expect_real(p), expect_real(&p.reflect()))
}

/// Panics on the empty matrix.
pub fn lambda_max(h: &HermitianMatrix) -> AlgebraicRoot {
    largest_eigenvalue(&h.charpoly())
}

pub fn lambda_min(h: &HermitianMatrix) -> AlgebraicRoot {
    smallest_eigenvalue(&h.charpoly())
}

pub fn spectral_radius(h: &HermitianMatrix) -> AlgebraicRoot {
    spectral_radius_of(&h.charpoly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_mixed;
    use crate::hermitian::hermitian_adjacency;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn single_edge() {
        let h = hermitian_adjacency(&parse_mixed("0 1").unwrap());
        assert_eq!(lambda_max(&h).exact_value(), Some(&BigRational::from_integer(BigInt::from(1))));
        assert_eq!(lambda_min(&h).approx(), -1.0);
    }

    #[test]
    fn radius_from_either_end() {
        // x^4 - 5x^2 + 4: rho = 2 exactly
        let p = IntPoly::from_i64(&[4, 0, -5, 0, 1]);
        assert_eq!(spectral_radius_of(&p), AlgebraicRoot::from_integer(2));
        // x^4 - 5x^2 + 2x + 2: rho = |lambda_min| ~ 2.343 > lambda_max ~ 1.814
        let p = IntPoly::from_i64(&[2, 2, -5, 0, 1]);
        let rho = spectral_radius_of(&p);
        assert!((rho.approx() - 2.3429).abs() < 1e-3);
        assert!(largest_eigenvalue(&p) < rho);
        assert_eq!(smallest_eigenvalue(&p).neg(), rho);
    }
}
