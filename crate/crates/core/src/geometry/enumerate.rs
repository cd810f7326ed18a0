//! Distinct signed permutations of a vector with repeated entries.
//!
//! Entries are grouped into classes: a zero class, and one class per
//! distinct nonzero value up to sign. The distinct signed permutations are
//! then exactly the distinct arrangements of the class labels times an
//! independent sign on every nonzero position, which gives
//!
//! ```text
//! 2^m · n! / (m_1! ··· m_k! · (n - m)!)
//! ```
//!
//! vertices for `m` nonzero entries with class multiplicities `m_i`.

use std::ops::Neg;

use crate::{Error, Result};

/// Default upper bound on the number of enumerated vertices.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// Entries closer than this (per coordinate) are treated as equal.
pub const DEDUP_TOL: f64 = 1e-12;

/// Label 0 is the zero class; labels `1..=k` index `reps[label - 1]`.
#[derive(Debug, Clone)]
pub struct SignPermOrbit<T> {
    reps: Vec<T>,
    labels: Vec<usize>,
    zero: T,
}

impl<T> SignPermOrbit<T>
where
    T: Copy + Neg<Output = T>,
{
    /// Groups `values` into sign classes.
    ///
    /// `canonical` must map `v` and `-v` to the same representative, and
    /// `close` decides whether two representatives belong to one class.
    pub fn new(
        values: &[T],
        zero: T,
        is_zero: impl Fn(&T) -> bool,
        canonical: impl Fn(T) -> T,
        close: impl Fn(&T, &T) -> bool,
    ) -> Self {
        let mut reps: Vec<T> = Vec::new();
        let mut labels = Vec::with_capacity(values.len());
        for &v in values {
            if is_zero(&v) {
                labels.push(0);
                continue;
            }
            let c = canonical(v);
            match reps.iter().position(|r| close(r, &c)) {
                Some(i) => labels.push(i + 1),
                None => {
                    reps.push(c);
                    labels.push(reps.len());
                }
            }
        }
        labels.sort_unstable();
        Self { reps, labels, zero }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn nonzero_count(&self) -> usize {
        self.labels.iter().filter(|l| **l != 0).count()
    }

    /// Number of distinct signed permutations, saturating at `u128::MAX`.
    pub fn count(&self) -> u128 {
        let n = self.labels.len() as u128;
        let mut remaining = n;
        let mut total: u128 = 1;
        let mut i = 0;
        while i < self.labels.len() {
            let j = self.labels[i..]
                .iter()
                .position(|l| *l != self.labels[i])
                .map_or(self.labels.len(), |off| i + off);
            let mult = (j - i) as u128;
            total = total.saturating_mul(binomial(remaining, mult));
            remaining -= mult;
            i = j;
        }
        let m = self.nonzero_count() as u32;
        let signs = 1u128.checked_shl(m).unwrap_or(u128::MAX);
        total.saturating_mul(signs)
    }

    /// All distinct signed permutations, ordered lexicographically by
    /// (label arrangement, sign mask).
    pub fn enumerate(&self, cap: u128) -> Result<Vec<Vec<T>>> {
        let count = self.count();
        if count > cap {
            return Err(Error::EnumerationTooLarge { count, cap });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut arrangement = self.labels.clone();
        loop {
            let nonzero: Vec<usize> = arrangement
                .iter()
                .enumerate()
                .filter(|(_, l)| **l != 0)
                .map(|(i, _)| i)
                .collect();
            let base: Vec<T> = arrangement
                .iter()
                .map(|&l| if l == 0 { self.zero } else { self.reps[l - 1] })
                .collect();
            for mask in 0u64..(1u64 << nonzero.len()) {
                let mut v = base.clone();
                for (bit, &pos) in nonzero.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        v[pos] = -v[pos];
                    }
                }
                out.push(v);
            }
            if !next_permutation(&mut arrangement) {
                break;
            }
        }
        debug_assert_eq!(out.len() as u128, count);
        Ok(out)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        // r * (n - i) is divisible by (i + 1) at every step
        r = match r.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    r
}

/// Advances `v` to the next lexicographic permutation. Returns `false` (and
/// leaves `v` sorted ascending) after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        v.reverse();
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Sign classes for real entries: grouped by absolute value.
pub(crate) fn real_orbit(values: &[f64]) -> SignPermOrbit<f64> {
    SignPermOrbit::new(
        values,
        0.0,
        |v| v.abs() <= DEDUP_TOL,
        f64::abs,
        |a, b| (a - b).abs() <= DEDUP_TOL,
    )
}

/// Distinct permutations (no sign changes) of `values`, lexicographic in
/// the order of first appearance of each distinct value.
pub(crate) fn distinct_permutations(values: &[f64]) -> Vec<Vec<f64>> {
    let mut reps: Vec<f64> = Vec::new();
    let mut labels: Vec<usize> = values
        .iter()
        .map(
            |v| match reps.iter().position(|r| (r - v).abs() <= DEDUP_TOL) {
                Some(i) => i,
                None => {
                    reps.push(*v);
                    reps.len() - 1
                }
            },
        )
        .collect();
    labels.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(labels.iter().map(|&l| reps[l]).collect());
        if !next_permutation(&mut labels) {
            break;
        }
    }
    out
}
