use std::f64::consts::{LN_2, PI};

use crate::geometry::{ball_volume, cross_polytope_volume, insphere_radius};
use crate::majorization::sign_perm_member;
use crate::quantum::{to_coords, DensityMatrix};
use crate::{Error, EuclideanPoint, Result};

/// `ln((k-1)!)` summed for `k = 1..=d`, i.e. `ln Γ(1)···Γ(d)`.
fn ln_gamma_product(d: usize) -> f64 {
    (1..=d).map(|k| ln_factorial(k - 1)).sum()
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|j| (j as f64).ln()).sum()
}

/// Hilbert-Schmidt volume of the `d×d` density matrices,
/// `√d · π^{d(d-1)/2} / 2^{(d-1)/2} · Γ(1)···Γ(d) / Γ(d²)`.
///
/// Evaluated in log space; fails only when the result leaves the range of
/// `f64`.
pub fn hs_volume(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("need d >= 2, got {d}")));
    }
    let df = d as f64;
    let ln_v = 0.5 * df.ln() + 0.5 * df * (df - 1.0) * PI.ln() - 0.5 * (df - 1.0) * LN_2
        + ln_gamma_product(d)
        - ln_factorial(d * d - 1);
    let v = ln_v.exp();
    if v == 0.0 || !v.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "HS volume for d = {d} is outside the f64 range (ln V = {ln_v})"
        )));
    }
    Ok(v)
}

/// Fraction of the state space covered by a cross-polytope of scale `α`:
/// `2^{(2d+3)(d-1)/2} α^{d²-1} / (√d π^{d(d-1)/2} Γ(1)···Γ(d))`.
///
/// # Panics
/// If `d < 2` or `alpha < 0`.
pub fn robustness_fraction(d: usize, alpha: f64) -> f64 {
    assert!(d >= 2 && alpha >= 0.0, "need d >= 2 and alpha >= 0");
    if alpha == 0.0 {
        return 0.0;
    }
    let df = d as f64;
    let ln_f = 0.5 * (2.0 * df + 3.0) * (df - 1.0) * LN_2 + (df * df - 1.0) * alpha.ln()
        - 0.5 * df.ln()
        - 0.5 * df * (df - 1.0) * PI.ln()
        - ln_gamma_product(d);
    ln_f.exp()
}

/// Whether `probe` lies in the cross-polytope of scale `α` centred on
/// `center`, decided by weak majorization of the folded offset against
/// `(α, 0, …, 0)`.
pub fn robustness_member(
    probe: &DensityMatrix,
    center: &DensityMatrix,
    alpha: f64,
    tol: f64,
) -> Result<bool> {
    if probe.dim() != center.dim() {
        return Err(Error::DimensionMismatch {
            expected: center.dim(),
            found: probe.dim(),
        });
    }
    if !(alpha >= 0.0) {
        return Err(Error::InvalidArgument(format!("alpha {alpha} is negative")));
    }
    let offset = to_coords(probe).point() - to_coords(center).point();
    let basis = EuclideanPoint::axis(offset.dim(), 0, alpha);
    sign_perm_member(&offset, &basis, tol)
}

/// Insphere of the `(d²-1)`-cross-polytope of scale `α` compared with the
/// polytope itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InsphereReport {
    pub radius: f64,
    pub ball_volume: f64,
    pub cross_volume: f64,
    /// `ball_volume / cross_volume`; zero when `α = 0`.
    pub ratio: f64,
    /// The rough estimate `(π/4)^{(d²-1)/2}`.
    pub approx_ratio: f64,
}

pub fn insphere_report(d: usize, alpha: f64) -> InsphereReport {
    assert!(d >= 2 && alpha >= 0.0, "need d >= 2 and alpha >= 0");
    let n = d * d - 1;
    let radius = insphere_radius(n, alpha);
    let ball = ball_volume(n, radius);
    let cross = cross_polytope_volume(n, alpha);
    InsphereReport {
        radius,
        ball_volume: ball,
        cross_volume: cross,
        ratio: if cross > 0.0 { ball / cross } else { 0.0 },
        approx_ratio: (PI / 4.0).powf(n as f64 / 2.0),
    }
}
