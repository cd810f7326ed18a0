//! Density matrices, the isometric coordinate chart, the 3-tangle and
//! pure-state sign permutation polytopes.

mod coords;
mod enumerate;
mod state;
mod tangle;

pub use coords::{basis, from_coords, to_coords, StateCoords};
pub use enumerate::{
    enumerate_bloch_sign_perms, enumerate_pure_sign_perms, PureEnumeration, PureFilter,
};
pub use state::{hs_distance, hs_norm, purity, validate_state, DensityMatrix, PureState};
pub use tangle::{make_canonical, three_tangle, CanonicalState};

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Default tolerance for Hermiticity, trace and positivity checks.
pub const STATE_TOL: f64 = 1e-9;
