//! Sign permutation polytopes in Euclidean space and their quantum
//! counterparts in the space of density matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`majorization`] holds the partial-order core: descending sorts,
//!   (weak) majorization and the two membership tests they give for
//!   permutahedra and sign permutation polytopes.
//! * [`geometry`] enumerates vertex sets, decides hull membership with a
//!   small dense phase-1 simplex, and provides the closed-form volumes and
//!   radii used elsewhere.
//! * [`quantum`] covers density matrices, the isometric coordinate chart
//!   onto `E^{d²-1}`, the three-qubit 3-tangle and pure-state sign
//!   permutation enumeration.
//! * [`algorithms`] builds the maximal inscribed cross-polytope inside a
//!   convex decomposition and reports robustness fractions against the
//!   Hilbert-Schmidt volume of the state space.

pub mod algorithms;
mod error;
pub mod geometry;
pub mod majorization;
mod point;
pub mod quantum;

pub use error::{Error, Result, StateViolation};
pub use point::{EuclideanPoint, SignedPermutation};

/// Default absolute tolerance for partial sums and hull residuals.
pub const DEFAULT_TOL: f64 = 1e-9;
