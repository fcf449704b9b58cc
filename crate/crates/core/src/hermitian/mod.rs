//! Hermitian adjacency matrices over the Gaussian integers.

mod eigen;
mod gauss;
mod matrix;
mod rank_one;
mod spectrum;

pub use eigen::{eigenvalues_numeric, jacobi_symmetric};
pub use gauss::GaussInt;
pub use matrix::{charpoly, hermitian_adjacency, HermitianMatrix};
pub(crate) use matrix::charpoly_of_exponents;
pub use rank_one::{is_positive_semidefinite, verify_rank_one_identity, RankOneOutcome, RankOneWitness};
pub use spectrum::{
    lambda_max, lambda_min, largest_eigenvalue, smallest_eigenvalue, spectral_radius,
    spectral_radius_of,
};
