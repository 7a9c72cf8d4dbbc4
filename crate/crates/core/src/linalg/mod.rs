//! Dense linear algebra for small symmetric matrices.
//!
//! Numeric spectra come from a cyclic Jacobi eigensolver; exact
//! characteristic polynomials, determinants and inertia come from the
//! division-free Berkowitz algorithm over big integers.

mod charpoly;
mod exact;
mod jacobi;
mod lemmas;
mod matrix;
mod spectrum;

pub use charpoly::{charpoly_exact, inertia_exact, Charpoly, Inertia};
pub use exact::ExactValue;
pub use jacobi::{eig_symmetric, symmetric_eigenvalues, DEFAULT_TOL};
pub use lemmas::{
    block2_spectrum_check, block2_spectrum_deviation, column_sum_identity_check,
    column_sum_identity_value, solve,
};
pub use matrix::{Matrix, SymmetricIntMatrix};
pub use spectrum::{multiset_distance, SpectralValue, Spectrum, SpectrumEntry};
