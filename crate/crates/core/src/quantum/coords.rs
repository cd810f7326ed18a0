//! Isometric chart `M_d → E^{d²-1}`.
//!
//! `ρ - I/d` is expanded in an orthonormal basis of traceless Hermitian
//! matrices (`Tr B_j B_k = δ_jk`), so Euclidean distance between
//! coordinates equals Hilbert-Schmidt distance between states. The basis
//! is the generalized Gell-Mann family scaled by `1/√2`, ordered as
//!
//! 1. symmetric off-diagonals `(E_jk + E_kj)/√2` for `j < k` lexicographic,
//! 2. antisymmetric off-diagonals `-i(E_jk - E_kj)/√2`, same order,
//! 3. diagonals `(E_00 + … + E_{l-1,l-1} - l E_ll)/√(l(l+1))`, `l = 1..d-1`.
//!
//! For `d = 2` this is `(σ_x, σ_y, σ_z)/√2`, so a qubit with Bloch vector
//! `P` has coordinates `P/√2`.

use num_complex::Complex64;

use super::{CMatrix, DensityMatrix};
use crate::{Error, EuclideanPoint, Result};

/// Coordinates of a state (or of any Hermitian unit-trace matrix).
#[derive(Debug, Clone, PartialEq)]
pub struct StateCoords {
    point: EuclideanPoint,
    dim: usize,
}

impl StateCoords {
    pub fn new(point: EuclideanPoint, dim: usize) -> Result<Self> {
        if dim < 2 || point.dim() != dim * dim - 1 {
            return Err(Error::DimensionMismatch {
                expected: dim.max(2) * dim.max(2) - 1,
                found: point.dim(),
            });
        }
        Ok(Self { point, dim })
    }

    /// `d` such that `d² - 1 = n`, if any.
    pub fn from_point(point: EuclideanPoint) -> Result<Self> {
        let n = point.dim();
        let d = ((n + 1) as f64).sqrt().round() as usize;
        Self::new(point, d)
    }

    pub fn point(&self) -> &EuclideanPoint {
        &self.point
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Conventional Bloch vector `√2 · coords`.
    pub fn bloch(&self) -> EuclideanPoint {
        self.point.scale(std::f64::consts::SQRT_2)
    }

    pub fn from_bloch(bloch: EuclideanPoint) -> Result<Self> {
        Self::from_point(bloch.scale(std::f64::consts::FRAC_1_SQRT_2))
    }
}

/// The `d² - 1` orthonormal traceless Hermitian basis matrices.
pub fn basis(d: usize) -> Vec<CMatrix> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(d * d - 1);
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|j| (j + 1..d).map(move |k| (j, k)))
        .collect();
    for &(j, k) in &pairs {
        let mut b = CMatrix::zeros(d, d);
        b[(j, k)] = Complex64::new(s, 0.0);
        b[(k, j)] = Complex64::new(s, 0.0);
        out.push(b);
    }
    for &(j, k) in &pairs {
        let mut b = CMatrix::zeros(d, d);
        b[(j, k)] = Complex64::new(0.0, -s);
        b[(k, j)] = Complex64::new(0.0, s);
        out.push(b);
    }
    for l in 1..d {
        let norm = ((l * (l + 1)) as f64).sqrt();
        let mut b = CMatrix::zeros(d, d);
        for j in 0..l {
            b[(j, j)] = Complex64::new(1.0 / norm, 0.0);
        }
        b[(l, l)] = Complex64::new(-(l as f64) / norm, 0.0);
        out.push(b);
    }
    out
}

/// `c_k = Tr(ρ B_k)`
pub fn to_coords(rho: &DensityMatrix) -> StateCoords {
    let d = rho.dim();
    let m = rho.matrix();
    let coords = basis(d)
        .iter()
        // Tr(ρB) = Σ_ij ρ_ij B_ji
        .map(|b| {
            m.iter()
                .zip(b.transpose().iter())
                .map(|(x, y)| x * y)
                .sum::<Complex64>()
                .re
        })
        .collect();
    StateCoords {
        point: EuclideanPoint::new(coords).expect("finite state has finite coordinates"),
        dim: d,
    }
}

/// `I/d + Σ c_k B_k`: Hermitian with unit trace, but not necessarily
/// positive semidefinite.
pub fn from_coords(c: &StateCoords) -> CMatrix {
    let d = c.dim;
    let mut m = CMatrix::identity(d, d).scale(1.0 / d as f64);
    for (ck, b) in c.point.coords().iter().zip(basis(d)) {
        m += b.scale(*ck);
    }
    m
}
