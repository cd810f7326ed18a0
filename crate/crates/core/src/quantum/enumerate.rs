//! Pure-state sign permutation polytopes.
//!
//! Signed permutations either act on the amplitude vector of a pure state
//! (reordering basis labels and flipping amplitudes, which always yields a
//! unit vector) or on its Bloch coordinates, where only images that are
//! again valid pure states are kept.

use num_complex::Complex64;

use super::{from_coords, three_tangle, validate_state, PureState, StateCoords};
use crate::geometry::{SignPermOrbit, DEDUP_TOL};
use crate::{Error, EuclideanPoint, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PureFilter {
    /// Keep every image that is a valid pure state.
    #[default]
    AnyPure,
    /// Additionally require a vanishing 3-tangle (three qubits only).
    WType,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PureEnumeration<T> {
    /// Number of distinct signed permutations generated.
    pub enumerated: u128,
    /// Images that passed the filter, in enumeration order.
    pub retained: Vec<T>,
}

fn canonical_up_to_sign(z: Complex64) -> Complex64 {
    if z.re > DEDUP_TOL || (z.re.abs() <= DEDUP_TOL && z.im > 0.0) {
        z
    } else {
        -z
    }
}

fn amplitude_orbit(amps: &[Complex64]) -> SignPermOrbit<Complex64> {
    SignPermOrbit::new(
        amps,
        Complex64::default(),
        |z| z.norm() <= DEDUP_TOL,
        canonical_up_to_sign,
        |a, b| (a - b).norm() <= DEDUP_TOL,
    )
}

/// Applies every distinct signed permutation to the amplitudes of `psi`.
///
/// With [`PureFilter::WType`] only images with `τ₃ <= tol` are retained;
/// that filter requires `dim = 8`.
pub fn enumerate_pure_sign_perms(
    psi: &PureState,
    filter: PureFilter,
    tol: f64,
    cap: u128,
) -> Result<PureEnumeration<PureState>> {
    if filter == PureFilter::WType && psi.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: psi.dim(),
        });
    }
    let orbit = amplitude_orbit(psi.amplitudes());
    let enumerated = orbit.count();
    let mut retained = Vec::new();
    for amps in orbit.enumerate(cap)? {
        let image = PureState::from_unit_unchecked(amps);
        let keep = match filter {
            PureFilter::AnyPure => true,
            PureFilter::WType => three_tangle(&image)? <= tol,
        };
        if keep {
            retained.push(image);
        }
    }
    Ok(PureEnumeration {
        enumerated,
        retained,
    })
}

/// Applies every distinct signed permutation to the coordinates of a pure
/// state and keeps those that map back to a valid pure state.
///
/// `tol` bounds the positivity check and, for [`PureFilter::WType`], the
/// 3-tangle of the recovered state vector.
pub fn enumerate_bloch_sign_perms(
    coords: &StateCoords,
    filter: PureFilter,
    tol: f64,
    cap: u128,
) -> Result<PureEnumeration<StateCoords>> {
    let d = coords.dim();
    if filter == PureFilter::WType && d != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: d,
        });
    }
    let orbit = SignPermOrbit::new(
        coords.point().coords(),
        0.0,
        |v| v.abs() <= DEDUP_TOL,
        f64::abs,
        |a, b| (a - b).abs() <= DEDUP_TOL,
    );
    let enumerated = orbit.count();
    let mut retained = Vec::new();
    for v in orbit.enumerate(cap)? {
        let image = StateCoords::new(EuclideanPoint::new(v)?, d)?;
        let Ok(rho) = validate_state(from_coords(&image), tol) else {
            continue;
        };
        if !rho.is_pure(tol) {
            continue;
        }
        if filter == PureFilter::WType && three_tangle(&rho.leading_vector())? > tol {
            continue;
        }
        retained.push(image);
    }
    Ok(PureEnumeration {
        enumerated,
        retained,
    })
}
