use std::ops::{Add, Index, Sub};

use crate::{Error, Result};

/// A finite real `n`-vector, `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanPoint(Vec<f64>);

impl EuclideanPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self(coords))
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "zero-dimensional point");
        Self(vec![0.0; n])
    }

    /// `alpha * e_axis` in `n` dimensions.
    pub fn axis(n: usize, axis: usize, alpha: f64) -> Self {
        let mut p = Self::zeros(n);
        p.0[axis] = alpha;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.iter().map(|c| c.abs()).collect())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.iter().map(|c| c * s).collect())
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm1(&self) -> f64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn norm2(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub(crate) fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for EuclideanPoint {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &EuclideanPoint {
    type Output = EuclideanPoint;

    fn add(self, rhs: &EuclideanPoint) -> EuclideanPoint {
        assert_eq!(self.dim(), rhs.dim());
        EuclideanPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &EuclideanPoint {
    type Output = EuclideanPoint;

    fn sub(self, rhs: &EuclideanPoint) -> EuclideanPoint {
        assert_eq!(self.dim(), rhs.dim());
        EuclideanPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl TryFrom<Vec<f64>> for EuclideanPoint {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

/// A coordinate permutation together with a sign per output coordinate.
///
/// Applied to `a`, output coordinate `i` is `signs[i] * a[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!(
                    "{perm:?} is not a bijection on 0..{n}"
                )));
            }
            seen[p] = true;
        }
        if let Some(s) = signs.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::InvalidPermutation(format!(
                "sign {s} is not +1 or -1"
            )));
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Applies the permutation to any slice whose elements can be negated.
    pub fn apply_slice<T>(&self, values: &[T]) -> Result<Vec<T>>
    where
        T: Copy + std::ops::Neg<Output = T>,
    {
        if values.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: values.len(),
            });
        }
        Ok(self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| if s < 0 { -values[p] } else { values[p] })
            .collect())
    }

    pub fn apply(&self, p: &EuclideanPoint) -> Result<EuclideanPoint> {
        self.apply_slice(p.coords()).map(EuclideanPoint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(EuclideanPoint::new(vec![]), Err(Error::EmptyPoint));
        assert_eq!(
            EuclideanPoint::new(vec![1.0, f64::NAN]),
            Err(Error::NonFinite(1))
        );
        assert_eq!(
            EuclideanPoint::new(vec![f64::INFINITY]),
            Err(Error::NonFinite(0))
        );
    }

    #[test]
    fn signed_permutation_validation() {
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 2], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1, 2]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1]).is_err());
    }

    #[test]
    fn signed_permutation_action() {
        let sp = SignedPermutation::new(vec![2, 0, 1], vec![1, -1, 1]).unwrap();
        let p = EuclideanPoint::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(sp.apply(&p).unwrap().coords(), &[3.0, -1.0, 2.0]);
        assert_eq!(SignedPermutation::identity(3).apply(&p).unwrap(), p);
    }
}
