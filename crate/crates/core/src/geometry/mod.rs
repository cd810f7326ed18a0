//! Vertex sets, hull membership, separation and volumes.
//!
//! Polytopes are only ever held in V-representation. Membership is decided
//! either by majorization (see [`crate::majorization`]) or by linear
//! feasibility over the explicit vertex list.

mod enumerate;
pub mod simplex;
mod volume;

pub use enumerate::{SignPermOrbit, DEDUP_TOL, DEFAULT_ENUMERATION_CAP};
pub use volume::{ball_volume, cross_polytope_volume, insphere_radius};

use nalgebra::DMatrix;

use crate::majorization::sign_perm_member;
use crate::{Error, EuclideanPoint, Result};
use simplex::Feasibility;

/// Nonempty, deduplicated set of points of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexSet {
    points: Vec<EuclideanPoint>,
}

impl VertexSet {
    /// Drops points equal (within [`DEDUP_TOL`] per coordinate) to an earlier one.
    pub fn new(points: Vec<EuclideanPoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidArgument("vertex set is empty".into()));
        };
        let n = first.dim();
        let mut kept: Vec<EuclideanPoint> = Vec::with_capacity(points.len());
        for p in points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.dim(),
                });
            }
            if !kept.iter().any(|q| q.max_abs_diff(&p) <= DEDUP_TOL) {
                kept.push(p);
            }
        }
        Ok(Self { points: kept })
    }

    /// Caller guarantees the points are distinct, nonempty and of one dimension.
    fn from_distinct(points: Vec<EuclideanPoint>) -> Self {
        debug_assert!(!points.is_empty());
        Self { points }
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[EuclideanPoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EuclideanPoint> {
        self.points.iter()
    }

    pub fn translate(&self, by: &EuclideanPoint) -> Self {
        Self::from_distinct(self.points.iter().map(|p| p + by).collect())
    }
}

/// `{x : ⟨u, x⟩ = β}` with `u ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: EuclideanPoint,
    offset: f64,
}

impl Hyperplane {
    pub fn new(normal: EuclideanPoint, offset: f64) -> Result<Self> {
        if normal.coords().iter().all(|c| *c == 0.0) {
            return Err(Error::InvalidArgument("hyperplane normal is zero".into()));
        }
        if !offset.is_finite() {
            return Err(Error::InvalidArgument(
                "hyperplane offset is not finite".into(),
            ));
        }
        Ok(Self { normal, offset })
    }

    pub fn normal(&self) -> &EuclideanPoint {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Signed value `⟨u, x⟩ - β`: negative in the lower open half-space.
    pub fn evaluate(&self, x: &EuclideanPoint) -> Result<f64> {
        self.normal.check_same_dim(x)?;
        Ok(self.normal.dot(x) - self.offset)
    }

    pub fn contains(&self, x: &EuclideanPoint, tol: f64) -> Result<bool> {
        Ok(self.evaluate(x)?.abs() <= tol)
    }
}

/// Weights of a convex combination over a [`VertexSet`]; weight `i`
/// multiplies vertex `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexCombination {
    weights: Vec<f64>,
}

impl ConvexCombination {
    pub const SUM_TOL: f64 = 1e-9;

    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidArgument("no weights".into()));
        }
        if let Some(w) = weights.iter().find(|w| !(**w >= 0.0) || !w.is_finite()) {
            return Err(Error::InvalidArgument(format!("weight {w} is negative")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOL {
            return Err(Error::InvalidArgument(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∑ λ_i v_i`
    pub fn combine(&self, v: &VertexSet) -> Result<EuclideanPoint> {
        if v.len() != self.weights.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: self.weights.len(),
            });
        }
        let mut acc = vec![0.0; v.dim()];
        for (w, p) in self.weights.iter().zip(v.iter()) {
            for (a, c) in acc.iter_mut().zip(p.coords()) {
                *a += w * c;
            }
        }
        EuclideanPoint::new(acc)
    }
}

/// The cross-polytope `center + conv{±α e_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossPolytopeSpec {
    scale: f64,
    center: EuclideanPoint,
}

impl CrossPolytopeSpec {
    pub fn new(center: EuclideanPoint, scale: f64) -> Result<Self> {
        if !(scale >= 0.0) || !scale.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "cross-polytope scale {scale} must be finite and non-negative"
            )));
        }
        Ok(Self { scale, center })
    }

    pub fn dimension(&self) -> usize {
        self.center.dim()
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn center(&self) -> &EuclideanPoint {
        &self.center
    }

    pub fn edge_length(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.scale
    }

    pub fn volume(&self) -> f64 {
        cross_polytope_volume(self.dimension(), self.scale)
    }

    pub fn insphere_radius(&self) -> f64 {
        insphere_radius(self.dimension(), self.scale)
    }

    /// `2n` vertices `center ± α e_k`, ordered `+e_1, -e_1, +e_2, …`.
    /// Collapses to the single center point when `α = 0`.
    pub fn vertices(&self) -> VertexSet {
        let n = self.dimension();
        if self.scale == 0.0 {
            return VertexSet::from_distinct(vec![self.center.clone()]);
        }
        let pts = (0..n)
            .flat_map(|k| [self.scale, -self.scale].map(|s| EuclideanPoint::axis(n, k, s)))
            .map(|v| &v + &self.center)
            .collect();
        VertexSet::from_distinct(pts)
    }

    pub fn contains(&self, x: &EuclideanPoint, tol: f64) -> Result<bool> {
        self.center.check_same_dim(x)?;
        let basis = EuclideanPoint::axis(self.dimension(), 0, self.scale);
        sign_perm_member(&(x - &self.center), &basis, tol)
    }
}

/// The vertices `±π(a)` of the sign permutation polytope of `a`.
pub fn enumerate_sign_perm_vertices(a: &EuclideanPoint, cap: u128) -> Result<VertexSet> {
    let pts = enumerate::real_orbit(a.coords())
        .enumerate(cap)?
        .into_iter()
        .map(EuclideanPoint::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::from_distinct(pts))
}

/// `2^m · n! / (m_1! ··· m_k! · (n - m)!)` over the absolute values of `a`.
pub fn count_sign_perm_vertices(a: &EuclideanPoint) -> u128 {
    enumerate::real_orbit(a.coords()).count()
}

/// The vertices `π(a)` of the permutahedron of `a`.
pub fn enumerate_perm_vertices(a: &EuclideanPoint) -> VertexSet {
    let pts = enumerate::distinct_permutations(a.coords())
        .into_iter()
        .map(|c| EuclideanPoint::new(c).expect("permutation of a finite point"))
        .collect();
    VertexSet::from_distinct(pts)
}

/// Decides `x ∈ conv(v)` by phase-1 simplex on `{λ ≥ 0 : Vλ = x, 1ᵀλ = 1}`.
///
/// Returns the witness combination when `x` is a member; its residual
/// `‖∑λ_i v_i − x‖∞` is at most `tol`.
pub fn hull_member_lp(
    x: &EuclideanPoint,
    v: &VertexSet,
    tol: f64,
) -> Result<Option<ConvexCombination>> {
    let n = v.dim();
    x.check_same_dim(&v.points()[0])?;
    let m = v.len();
    let mut a = vec![0.0; (n + 1) * m];
    for (j, p) in v.iter().enumerate() {
        for (i, c) in p.coords().iter().enumerate() {
            a[i * m + j] = *c;
        }
        a[n * m + j] = 1.0;
    }
    let mut b = x.coords().to_vec();
    b.push(1.0);
    let Some(weights) = Feasibility::new(n + 1, m, a, b).solve(tol)? else {
        return Ok(None);
    };
    let sum: f64 = weights.iter().sum();
    Ok(Some(ConvexCombination {
        weights: weights.into_iter().map(|w| w / sum).collect(),
    }))
}

/// Whether `conv(va)` and `conv(vb)` share a point, by linear feasibility of
/// `∑λ_i a_i = ∑μ_j b_j` with both weight vectors convex.
pub fn hulls_intersect_lp(va: &VertexSet, vb: &VertexSet, tol: f64) -> Result<bool> {
    let n = va.dim();
    if vb.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: vb.dim(),
        });
    }
    let (ma, mb) = (va.len(), vb.len());
    let cols = ma + mb;
    let mut a = vec![0.0; (n + 2) * cols];
    for (j, p) in va.iter().enumerate() {
        for (i, c) in p.coords().iter().enumerate() {
            a[i * cols + j] = *c;
        }
        a[n * cols + j] = 1.0;
    }
    for (j, p) in vb.iter().enumerate() {
        for (i, c) in p.coords().iter().enumerate() {
            a[i * cols + ma + j] = -c;
        }
        a[(n + 1) * cols + ma + j] = 1.0;
    }
    let mut b = vec![0.0; n + 2];
    b[n] = 1.0;
    b[n + 1] = 1.0;
    Ok(Feasibility::new(n + 2, cols, a, b).solve(tol)?.is_some())
}

/// Disjointness of the permutahedra of `a` and `b`: they are disjoint
/// exactly when the coordinate sums differ.
pub fn hulls_disjoint(a: &EuclideanPoint, b: &EuclideanPoint, tol: f64) -> Result<bool> {
    a.check_same_dim(b)?;
    Ok((a.sum() - b.sum()).abs() > tol)
}

/// Affine independence via linear independence of the lifted points `(a, 1)`.
pub fn affinely_independent(v: &VertexSet) -> bool {
    let n = v.dim();
    let m = v.len();
    if m > n + 1 {
        return false;
    }
    let lifted = DMatrix::from_fn(m, n + 1, |i, j| if j < n { v.points()[i][j] } else { 1.0 });
    let sv = lifted.singular_values();
    let largest = sv.max();
    let rank = sv.iter().filter(|s| **s > 1e-9 * largest).count();
    rank == m
}

/// `H_{1_n, n(n+1)/2}`, which contains every vertex of the permutahedron
/// of `(1, 2, …, n)`.
pub fn permutahedron_hyperplane(n: usize) -> Result<Hyperplane> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    let normal = EuclideanPoint::new(vec![1.0; n])?;
    Hyperplane::new(normal, (n * (n + 1) / 2) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorization::rado_member;
    use crate::DEFAULT_TOL as TOL;

    fn p(v: &[f64]) -> EuclideanPoint {
        EuclideanPoint::new(v.to_vec()).unwrap()
    }

    fn octahedron() -> VertexSet {
        CrossPolytopeSpec::new(EuclideanPoint::zeros(3), 1.0)
            .unwrap()
            .vertices()
    }

    #[test]
    fn vertex_counts() {
        let cap = DEFAULT_ENUMERATION_CAP;
        assert_eq!(
            enumerate_sign_perm_vertices(&p(&[1.0, 2.0, 3.0]), cap)
                .unwrap()
                .len(),
            48
        );
        assert_eq!(
            enumerate_sign_perm_vertices(&p(&[1.0, 0.0, 0.0]), cap)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_sign_perm_vertices(&p(&[1.0, 1.0, 0.0]), cap)
                .unwrap()
                .len(),
            12
        );
        assert_eq!(count_sign_perm_vertices(&p(&[1.0, -1.0, 0.0])), 12);
    }

    #[test]
    fn count_formula_anchors() {
        let w = p(&[0.3, 0.0, 0.5, 0.0, 0.0, 0.6, 0.0, 0.2]);
        assert_eq!(count_sign_perm_vertices(&w), 26_880);
        for n in 1..=7 {
            let cross = EuclideanPoint::axis(n, 0, 2.5);
            assert_eq!(count_sign_perm_vertices(&cross), 2 * n as u128);
            let cube = p(&vec![0.7; n]);
            assert_eq!(count_sign_perm_vertices(&cube), 1u128 << n);
        }
    }

    #[test]
    fn vertex_set_dedups_and_validates() {
        let v =
            VertexSet::new(vec![p(&[1.0, 0.0]), p(&[1.0 + 1e-13, 0.0]), p(&[0.0, 1.0])]).unwrap();
        assert_eq!(v.len(), 2);
        assert!(VertexSet::new(vec![]).is_err());
        assert!(VertexSet::new(vec![p(&[1.0]), p(&[1.0, 2.0])]).is_err());
    }

    #[test]
    fn lp_centroid_of_octahedron() {
        let w = hull_member_lp(&EuclideanPoint::zeros(3), &octahedron(), TOL)
            .unwrap()
            .expect("origin is inside");
        let recon = w.combine(&octahedron()).unwrap();
        assert!(recon.norm2() <= TOL);
        assert!((w.weights().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lp_permutahedron_examples() {
        let v = enumerate_perm_vertices(&p(&[1.0, 2.0, 3.0]));
        assert_eq!(v.len(), 6);
        let x = p(&[2.0, 2.0, 2.0]);
        let w = hull_member_lp(&x, &v, TOL).unwrap().expect("member");
        assert!(w.combine(&v).unwrap().max_abs_diff(&x) <= TOL);
        assert!(rado_member(&x, &p(&[1.0, 2.0, 3.0]), TOL).unwrap());
        assert!(hull_member_lp(&p(&[1.01, 2.0, 3.0]), &v, TOL)
            .unwrap()
            .is_none());
    }

    #[test]
    fn lp_dimension_mismatch() {
        assert!(hull_member_lp(&p(&[0.0, 0.0]), &octahedron(), TOL).is_err());
    }

    #[test]
    fn disjointness_examples() {
        let a = p(&[1.0, 2.0, 3.0]);
        let b = p(&[0.0, 2.0, 3.0]);
        let c = p(&[0.0, 2.0, 4.0]);
        assert!(hulls_disjoint(&a, &b, TOL).unwrap());
        assert!(!hulls_disjoint(&a, &c, TOL).unwrap());
        assert!(!hulls_disjoint(&a, &a, TOL).unwrap());

        let (va, vb, vc) = (
            enumerate_perm_vertices(&a),
            enumerate_perm_vertices(&b),
            enumerate_perm_vertices(&c),
        );
        assert!(!hulls_intersect_lp(&va, &vb, TOL).unwrap());
        assert!(hulls_intersect_lp(&va, &vc, TOL).unwrap());
        assert!(hull_member_lp(&p(&[2.0, 2.0, 2.0]), &vc, TOL)
            .unwrap()
            .is_some());
    }

    #[test]
    fn affine_independence_examples() {
        let tri = VertexSet::new(vec![p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.0, 1.0])]).unwrap();
        assert!(affinely_independent(&tri));
        let line = VertexSet::new(vec![p(&[0.0, 0.0]), p(&[1.0, 1.0]), p(&[2.0, 2.0])]).unwrap();
        assert!(!affinely_independent(&line));
        let perms = enumerate_perm_vertices(&p(&[1.0, 2.0, 3.0]));
        assert!(!affinely_independent(&perms));
    }

    #[test]
    fn lifted_permutahedron_has_rank_three() {
        let perms = enumerate_perm_vertices(&p(&[1.0, 2.0, 3.0]));
        let lifted = DMatrix::from_fn(6, 4, |i, j| if j < 3 { perms.points()[i][j] } else { 1.0 });
        assert_eq!(lifted.rank(1e-9), 3);
        let three = VertexSet::new(perms.points()[..3].to_vec()).unwrap();
        assert!(affinely_independent(&three));
    }

    #[test]
    fn permutahedron_hyperplanes() {
        assert!(permutahedron_hyperplane(1).is_err());
        assert_eq!(permutahedron_hyperplane(2).unwrap().offset(), 3.0);
        for n in [3usize, 5] {
            let h = permutahedron_hyperplane(n).unwrap();
            assert_eq!(h.normal().coords(), vec![1.0; n].as_slice());
            let base = p(&(1..=n).map(|k| k as f64).collect::<Vec<_>>());
            let verts = enumerate_perm_vertices(&base);
            assert_eq!(verts.len(), (1..=n).product::<usize>());
            for v in verts.iter() {
                assert_eq!(h.evaluate(v).unwrap(), 0.0);
            }
        }
        assert_eq!(permutahedron_hyperplane(3).unwrap().offset(), 6.0);
        assert_eq!(permutahedron_hyperplane(5).unwrap().offset(), 15.0);
    }

    #[test]
    fn hyperplane_rejects_zero_normal() {
        assert!(Hyperplane::new(EuclideanPoint::zeros(3), 1.0).is_err());
    }

    #[test]
    fn convex_combination_validation() {
        assert!(ConvexCombination::new(vec![0.5, 0.5]).is_ok());
        assert!(ConvexCombination::new(vec![0.5, 0.6]).is_err());
        assert!(ConvexCombination::new(vec![1.5, -0.5]).is_err());
        assert!(ConvexCombination::new(vec![]).is_err());
    }

    #[test]
    fn cross_polytope_spec() {
        let c = CrossPolytopeSpec::new(p(&[1.0, 1.0, 1.0]), 0.5).unwrap();
        assert_eq!(c.vertices().len(), 6);
        assert!(c.contains(&p(&[1.5, 1.0, 1.0]), TOL).unwrap());
        assert!(c.contains(&p(&[1.2, 0.8, 1.1]), TOL).unwrap());
        assert!(!c.contains(&p(&[1.3, 0.7, 1.0]), TOL).unwrap());
        assert!((c.edge_length() - 0.5 * 2f64.sqrt()).abs() < 1e-15);
        assert!(CrossPolytopeSpec::new(p(&[0.0]), -1.0).is_err());
        let flat = CrossPolytopeSpec::new(p(&[0.0, 0.0]), 0.0).unwrap();
        assert_eq!(flat.vertices().len(), 1);
    }
}
