//! Majorization and weak majorization on real vectors.
//!
//! `a ≺ b` ("a is majorized by b") holds when every leading partial sum of
//! the descending rearrangement of `a` is bounded by the matching partial
//! sum of `b`, with equal totals. Dropping the equality on totals gives weak
//! majorization `a ≺_w b`.
//!
//! Two membership characterisations follow: `x` lies in the permutahedron
//! `conv{π(a)}` iff `x ≺ a`, and `x` lies in the sign permutation polytope
//! `conv{±π(a)}` iff `|x| ≺_w |a|`.

use crate::{EuclideanPoint, Result};

/// How the final partial sum of a weak-majorization test is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TotalSum {
    /// `∑x ≤ ∑a + tol`; describes the closed hull, so vertices are members.
    #[default]
    Closed,
    /// `∑x < ∑a - tol`; the literal strict form of the definition.
    Strict,
}

/// Coordinates sorted non-increasingly. Equal entries keep their input order.
pub fn sort_desc(p: &EuclideanPoint) -> EuclideanPoint {
    let mut c = p.coords().to_vec();
    // sort_by is stable
    c.sort_by(|x, y| y.total_cmp(x));
    EuclideanPoint::new(c).expect("sorting preserves finiteness")
}

fn prefix_sums(p: &EuclideanPoint) -> Vec<f64> {
    sort_desc(p)
        .coords()
        .iter()
        .scan(0.0, |acc, c| {
            *acc += c;
            Some(*acc)
        })
        .collect()
}

/// `a ≺ b` within `tol` on every partial sum.
pub fn majorizes(b: &EuclideanPoint, a: &EuclideanPoint, tol: f64) -> Result<bool> {
    b.check_same_dim(a)?;
    let sa = prefix_sums(a);
    let sb = prefix_sums(b);
    let n = sa.len();
    let leading = sa[..n - 1]
        .iter()
        .zip(&sb[..n - 1])
        .all(|(x, y)| *x <= *y + tol);
    Ok(leading && (sa[n - 1] - sb[n - 1]).abs() <= tol)
}

/// `x ≺_w a` with the closed (non-strict) comparison on the total.
pub fn weakly_majorized(x: &EuclideanPoint, a: &EuclideanPoint, tol: f64) -> Result<bool> {
    weakly_majorized_with(x, a, tol, TotalSum::Closed)
}

pub fn weakly_majorized_with(
    x: &EuclideanPoint,
    a: &EuclideanPoint,
    tol: f64,
    total: TotalSum,
) -> Result<bool> {
    x.check_same_dim(a)?;
    let sx = prefix_sums(x);
    let sa = prefix_sums(a);
    let n = sx.len();
    let leading = sx[..n - 1]
        .iter()
        .zip(&sa[..n - 1])
        .all(|(p, q)| *p <= *q + tol);
    let last = match total {
        TotalSum::Closed => sx[n - 1] <= sa[n - 1] + tol,
        TotalSum::Strict => sx[n - 1] < sa[n - 1] - tol,
    };
    Ok(leading && last)
}

/// Membership of `x` in the permutahedron `conv{π(a) : π ∈ S_n}`.
pub fn rado_member(x: &EuclideanPoint, a: &EuclideanPoint, tol: f64) -> Result<bool> {
    majorizes(a, x, tol)
}

/// Membership of `x` in the sign permutation polytope `conv{±π(a)}`.
///
/// Both arguments are first folded into the positive orthant by taking
/// absolute values, which leaves the polytope and its point set unchanged.
pub fn sign_perm_member(x: &EuclideanPoint, a: &EuclideanPoint, tol: f64) -> Result<bool> {
    weakly_majorized(&x.abs(), &a.abs(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_TOL as TOL;

    fn p(v: &[f64]) -> EuclideanPoint {
        EuclideanPoint::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sort_desc_examples() {
        assert_eq!(sort_desc(&p(&[1.0, 2.0, 3.0])), p(&[3.0, 2.0, 1.0]));
        assert_eq!(sort_desc(&p(&[2.0, 2.0, 2.0])), p(&[2.0, 2.0, 2.0]));
        assert_eq!(
            sort_desc(&p(&[-1.0, 3.0, 0.0, 3.0])),
            p(&[3.0, 3.0, 0.0, -1.0])
        );
    }

    #[test]
    fn majorizes_examples() {
        let b = p(&[1.0, 2.0, 3.0]);
        assert!(majorizes(&b, &p(&[2.0, 2.0, 2.0]), TOL).unwrap());
        assert!(majorizes(&b, &p(&[3.0, 2.0, 1.0]), TOL).unwrap());
        assert!(!majorizes(&b, &p(&[3.0, 3.0, 0.0]), TOL).unwrap());
    }

    #[test]
    fn weak_examples() {
        let a = p(&[1.0, 2.0, 3.0]);
        assert!(weakly_majorized(&p(&[0.0, 0.0, 0.0]), &a, TOL).unwrap());
        assert!(weakly_majorized(&p(&[2.0, 2.0, 1.0]), &a, TOL).unwrap());
        assert!(!weakly_majorized(&p(&[3.0, 3.0, 0.0]), &a, TOL).unwrap());
    }

    #[test]
    fn strict_total_excludes_vertices() {
        let a = p(&[1.0, 2.0, 3.0]);
        assert!(weakly_majorized(&a, &a, TOL).unwrap());
        assert!(!weakly_majorized_with(&a, &a, TOL, TotalSum::Strict).unwrap());
        assert!(weakly_majorized_with(&p(&[1.0, 1.0, 1.0]), &a, TOL, TotalSum::Strict).unwrap());
    }

    #[test]
    fn rado_examples() {
        let a = p(&[1.0, 2.0, 3.0]);
        assert!(rado_member(&p(&[2.0, 2.0, 2.0]), &a, TOL).unwrap());
        assert!(rado_member(&a, &a, TOL).unwrap());
        assert!(!rado_member(&p(&[0.0, 2.0, 4.0]), &a, TOL).unwrap());
    }

    #[test]
    fn sign_perm_examples() {
        let a = p(&[1.0, 2.0, 3.0]);
        assert!(sign_perm_member(&p(&[-2.0, 2.0, 1.0]), &a, TOL).unwrap());
        assert!(sign_perm_member(&p(&[0.0, 0.0, 0.0]), &a, TOL).unwrap());
        assert!(sign_perm_member(&p(&[0.0; 3]), &p(&[-5.0, 0.1, 7.0]), TOL).unwrap());
        assert!(!sign_perm_member(&p(&[3.0, 3.0, 0.0]), &a, TOL).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = p(&[1.0, 2.0]);
        let b = p(&[1.0, 2.0, 3.0]);
        assert!(majorizes(&a, &b, TOL).is_err());
        assert!(weakly_majorized(&a, &b, TOL).is_err());
        assert!(rado_member(&a, &b, TOL).is_err());
        assert!(sign_perm_member(&a, &b, TOL).is_err());
    }

    #[test]
    fn scalar_case() {
        assert!(majorizes(&p(&[2.0]), &p(&[2.0]), TOL).unwrap());
        assert!(!majorizes(&p(&[2.0]), &p(&[1.0]), TOL).unwrap());
        assert!(sign_perm_member(&p(&[-1.5]), &p(&[2.0]), TOL).unwrap());
        assert!(!sign_perm_member(&p(&[-2.5]), &p(&[2.0]), TOL).unwrap());
    }
}
