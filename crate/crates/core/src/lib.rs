//! Eccentricity matrices of connected graphs.
//!
//! The eccentricity matrix of a connected graph keeps the distance `d(i, j)`
//! exactly when it equals `min(e(i), e(j))`, where `e` is the vertex
//! eccentricity, and zeroes every other entry. This crate builds those
//! matrices, computes their spectra (numerically with cyclic Jacobi, and
//! exactly through division-free characteristic polynomials), provides
//! closed-form spectra for several graph families, and ships a harness
//! that checks the known results about them by exhaustive or randomized
//! sweeps.
//!
//! Module map:
//! - [`graph`]: graphs, named families, operators, labeled trees, I/O formats.
//! - [`metric`]: distances, eccentricities, eccentricity matrices.
//! - [`linalg`]: matrices, Jacobi eigensolver, characteristic polynomials,
//!   inertia, exact quadratic surds and spectra.
//! - [`closed_forms`]: per-family closed-form spectra.
//! - [`verify`]: sweeps, cross-checks and property suites.

pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod metric;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use metric::{apsp, eccentricity_matrix, DistanceMatrix, EccentricityMatrix};
