//! Closed-form volumes and radii.

use statrs::function::gamma::ln_gamma;

/// Volume `(2α)^n / n!` of the cross-polytope `conv{±α e_i}`.
///
/// # Panics
/// If `n == 0` or `alpha < 0`.
pub fn cross_polytope_volume(n: usize, alpha: f64) -> f64 {
    assert!(n >= 1 && alpha >= 0.0, "need n >= 1 and alpha >= 0");
    (1..=n).map(|k| 2.0 * alpha / k as f64).product()
}

/// Radius `α/√n` of the ball inscribed in `conv{±α e_i}`.
///
/// # Panics
/// If `n == 0` or `alpha < 0`.
pub fn insphere_radius(n: usize, alpha: f64) -> f64 {
    assert!(n >= 1 && alpha >= 0.0, "need n >= 1 and alpha >= 0");
    alpha / (n as f64).sqrt()
}

/// Volume `π^{n/2} r^n / Γ(n/2 + 1)` of the Euclidean `n`-ball.
///
/// # Panics
/// If `n == 0` or `r < 0`.
pub fn ball_volume(n: usize, r: f64) -> f64 {
    assert!(n >= 1 && r >= 0.0, "need n >= 1 and r >= 0");
    if r == 0.0 {
        return 0.0;
    }
    let n = n as f64;
    (0.5 * n * std::f64::consts::PI.ln() + n * r.ln() - ln_gamma(0.5 * n + 1.0)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn cross_polytope_examples() {
        assert!(rel(cross_polytope_volume(3, 1.0), 4.0 / 3.0) < 1e-15);
        assert_eq!(cross_polytope_volume(1, 2.0), 4.0);
        assert_eq!(cross_polytope_volume(3, 0.0), 0.0);
    }

    #[test]
    fn insphere_examples() {
        assert!((insphere_radius(3, 1.0) - 0.577_350_269_189_625_8).abs() < 1e-15);
        assert_eq!(insphere_radius(1, 1.0), 1.0);
        assert_eq!(insphere_radius(4, 2.0), 1.0);
    }

    #[test]
    fn insphere_touches_facet_plane() {
        // distance from the origin to x1 + x2 + x3 + x4 = 2
        let d = 2.0 / (4.0f64).sqrt();
        assert!((insphere_radius(4, 2.0) - d).abs() < 1e-15);
    }

    #[test]
    fn ball_examples() {
        assert!(rel(ball_volume(2, 1.0), PI) < 1e-13);
        assert!(rel(ball_volume(3, 1.0), 4.0 * PI / 3.0) < 1e-13);
        let expected = PI.powi(4) * 0.5f64.powi(8) / 24.0;
        assert!(rel(ball_volume(8, 0.5), expected) < 1e-13);
        assert!((ball_volume(8, 0.5) - 0.015854).abs() < 1e-6);
        assert_eq!(ball_volume(5, 0.0), 0.0);
    }
}
