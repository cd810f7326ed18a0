use num_complex::Complex64;

use super::{CMatrix, STATE_TOL};
use crate::{Error, Result, StateViolation};

/// A validated `d×d` Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
}

/// Checks Hermiticity, unit trace and positivity, in that order.
///
/// The stored matrix is the Hermitian part `(M + M†)/2`, which differs from
/// `M` by at most `tol`.
pub fn validate_state(m: CMatrix, tol: f64) -> Result<DensityMatrix> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(StateViolation::NotSquare { rows, cols }.into());
    }
    if rows < 2 {
        return Err(StateViolation::TooSmall(rows).into());
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(StateViolation::NonFinite.into());
    }
    let adj = m.adjoint();
    let deviation = m
        .iter()
        .zip(adj.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if deviation > tol {
        return Err(StateViolation::NotHermitian { deviation }.into());
    }
    let herm = (&m + &adj).scale(0.5);
    let trace = herm.trace().re;
    if (trace - 1.0).abs() > tol {
        return Err(StateViolation::BadTrace { trace }.into());
    }
    let min_eigenvalue = herm.clone().symmetric_eigenvalues().min();
    if min_eigenvalue < -tol {
        return Err(StateViolation::NotPsd { min_eigenvalue }.into());
    }
    Ok(DensityMatrix { mat: herm })
}

impl DensityMatrix {
    pub fn maximally_mixed(d: usize) -> Self {
        assert!(d >= 2);
        Self {
            mat: CMatrix::identity(d, d).scale(1.0 / d as f64),
        }
    }

    pub fn from_diagonal(diag: &[f64], tol: f64) -> Result<Self> {
        let d = diag.len();
        validate_state(
            CMatrix::from_fn(d, d, |i, j| {
                if i == j {
                    Complex64::new(diag[i], 0.0)
                } else {
                    Complex64::default()
                }
            }),
            tol,
        )
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .mat
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn purity(&self) -> f64 {
        purity(self)
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        (self.purity() - 1.0).abs() <= tol
    }

    /// A unit eigenvector for the largest eigenvalue. For a pure state this
    /// is the state vector up to global phase.
    pub fn leading_vector(&self) -> PureState {
        let eig = self.mat.clone().symmetric_eigen();
        let k = eig.eigenvalues.imax();
        let v: Vec<Complex64> = eig.eigenvectors.column(k).iter().copied().collect();
        PureState::normalized(v)
            .expect("eigenvectors are nonzero")
            .0
    }
}

/// `Tr ρ²`
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.mat.iter().map(|z| z.norm_sqr()).sum()
}

/// `√Tr(A†A)`
pub fn hs_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn hs_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(hs_norm(&(&a.mat - &b.mat)))
}

/// A unit vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>, tol: f64) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(StateViolation::TooSmall(amplitudes.len()).into());
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > tol {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Divides by the Euclidean norm; returns the state and that norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<(Self, f64)> {
        let norm = norm(&amplitudes);
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        let amps = amplitudes.into_iter().map(|z| z / norm).collect();
        Ok((Self::new(amps, STATE_TOL)?, norm))
    }

    pub(crate) fn from_unit_unchecked(amplitudes: Vec<Complex64>) -> Self {
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// `|ψ⟩⟨ψ|`
    pub fn projector(&self) -> DensityMatrix {
        let d = self.dim();
        DensityMatrix {
            mat: CMatrix::from_fn(d, d, |i, j| self.amplitudes[i] * self.amplitudes[j].conj()),
        }
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn maximally_mixed_qubit_is_valid() {
        let m = CMatrix::identity(2, 2).scale(0.5);
        let rho = validate_state(m, STATE_TOL).unwrap();
        assert!((rho.purity() - 0.5).abs() < 1e-15);
        assert_eq!(rho, DensityMatrix::maximally_mixed(2));
    }

    #[test]
    fn negative_eigenvalue_is_rejected() {
        let err = DensityMatrix::from_diagonal(&[1.2, -0.2], STATE_TOL).unwrap_err();
        match err {
            Error::InvalidState(StateViolation::NotPsd { min_eigenvalue }) => {
                assert!((min_eigenvalue + 0.2).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn each_violation_is_named() {
        let mut m = CMatrix::identity(2, 2).scale(0.5);
        m[(0, 1)] = Complex64::new(0.1, 0.0);
        assert!(matches!(
            validate_state(m, STATE_TOL),
            Err(Error::InvalidState(StateViolation::NotHermitian { .. }))
        ));
        assert!(matches!(
            validate_state(CMatrix::identity(2, 2), STATE_TOL),
            Err(Error::InvalidState(StateViolation::BadTrace { trace })) if trace == 2.0
        ));
        assert!(matches!(
            validate_state(CMatrix::zeros(2, 3), STATE_TOL),
            Err(Error::InvalidState(StateViolation::NotSquare {
                rows: 2,
                cols: 3
            }))
        ));
        assert!(matches!(
            validate_state(CMatrix::identity(1, 1), STATE_TOL),
            Err(Error::InvalidState(StateViolation::TooSmall(1)))
        ));
    }

    #[test]
    fn ghz_projector_is_pure() {
        let s = 0.5f64.sqrt();
        let mut amps = vec![c(0.0); 8];
        amps[0] = c(s);
        amps[7] = c(s);
        let psi = PureState::new(amps, STATE_TOL).unwrap();
        let rho = validate_state(psi.projector().into_matrix(), STATE_TOL).unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn purity_examples() {
        for d in 2..5 {
            let p = DensityMatrix::maximally_mixed(d).purity();
            assert!((p - 1.0 / d as f64).abs() < 1e-15);
        }
        let rho = DensityMatrix::from_diagonal(&[0.75, 0.25], STATE_TOL).unwrap();
        assert!((rho.purity() - 0.625).abs() < 1e-15);
    }

    #[test]
    fn normalisation_reports_factor() {
        let (psi, n) = PureState::normalized(vec![c(3.0), c(4.0)]).unwrap();
        assert_eq!(n, 5.0);
        assert!((psi.norm() - 1.0).abs() < 1e-15);
        assert!(PureState::new(vec![c(3.0), c(4.0)], STATE_TOL).is_err());
        assert!(PureState::normalized(vec![c(0.0), c(0.0)]).is_err());
    }

    #[test]
    fn leading_vector_recovers_pure_state_up_to_phase() {
        let amps = vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let psi = PureState::new(amps, STATE_TOL).unwrap();
        let back = psi.projector().leading_vector();
        let overlap: Complex64 = psi
            .amplitudes()
            .iter()
            .zip(back.amplitudes())
            .map(|(a, b)| a.conj() * b)
            .sum();
        assert!((overlap.norm() - 1.0).abs() < 1e-12);
    }
}
