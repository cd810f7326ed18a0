//! Three-qubit 3-tangle via Cayley's 2×2×2 hyperdeterminant.

use num_complex::Complex64;

use super::PureState;
use crate::{Error, Result};

/// `τ₃ = 4 |Hdet(ψ)|` for a three-qubit state with amplitudes indexed
/// `ψ_abc` at position `4a + 2b + c`.
pub fn three_tangle(psi: &PureState) -> Result<f64> {
    if psi.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: psi.dim(),
        });
    }
    Ok(4.0 * hyperdeterminant(psi.amplitudes()).norm())
}

fn hyperdeterminant(p: &[Complex64]) -> Complex64 {
    let a = |i: usize, j: usize, k: usize| p[4 * i + 2 * j + k];
    let sq = |z: Complex64| z * z;

    let d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1))
        + sq(a(0, 0, 1)) * sq(a(1, 1, 0))
        + sq(a(0, 1, 0)) * sq(a(1, 0, 1))
        + sq(a(1, 0, 0)) * sq(a(0, 1, 1));

    let d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);

    let d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1)
        + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

    d1 - 2.0 * d2 + 4.0 * d3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalState {
    /// `(|000⟩ + |111⟩)/√2`
    Ghz,
    /// `(|100⟩ + |010⟩ + |001⟩)/√3`
    W,
}

pub fn make_canonical(kind: CanonicalState) -> PureState {
    let mut amps = vec![Complex64::default(); 8];
    match kind {
        CanonicalState::Ghz => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            amps[0] = s.into();
            amps[7] = s.into();
        }
        CanonicalState::W => {
            let s = 1.0 / 3f64.sqrt();
            for i in [1, 2, 4] {
                amps[i] = s.into();
            }
        }
    }
    PureState::from_unit_unchecked(amps)
}
