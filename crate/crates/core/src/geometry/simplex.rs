//! Dense phase-1 simplex for small feasibility problems
//! `find z >= 0 : A z = b`.
//!
//! Rows with negative right-hand side are negated, one artificial variable
//! is attached per row and their sum is minimised. Bland's rule picks both
//! the entering column and, among tied ratios, the leaving row, so the
//! method cannot cycle.

use crate::{Error, Result};

const PIVOT_EPS: f64 = 1e-11;

/// Dense row-major constraint system.
#[derive(Debug, Clone)]
pub struct Feasibility {
    rows: usize,
    cols: usize,
    a: Vec<f64>,
    b: Vec<f64>,
}

impl Feasibility {
    pub fn new(rows: usize, cols: usize, a: Vec<f64>, b: Vec<f64>) -> Self {
        assert_eq!(a.len(), rows * cols);
        assert_eq!(b.len(), rows);
        Self { rows, cols, a, b }
    }

    pub fn iteration_cap(&self) -> usize {
        50 * (self.rows + self.cols)
    }

    /// `max_i |(A z)_i - b_i|`
    pub fn residual(&self, z: &[f64]) -> f64 {
        (0..self.rows)
            .map(|i| {
                let row = &self.a[i * self.cols..(i + 1) * self.cols];
                let lhs: f64 = row.iter().zip(z).map(|(x, y)| x * y).sum();
                (lhs - self.b[i]).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Returns a non-negative `z` with `residual(z) <= tol`, or `None` when
    /// phase 1 ends without one.
    pub fn solve(&self, tol: f64) -> Result<Option<Vec<f64>>> {
        let (m, n) = (self.rows, self.cols);
        let width = n + m + 1;
        let rhs = width - 1;
        let mut t = vec![0.0; (m + 1) * width];
        for i in 0..m {
            let sign = if self.b[i] < 0.0 { -1.0 } else { 1.0 };
            for j in 0..n {
                t[i * width + j] = sign * self.a[i * n + j];
            }
            t[i * width + n + i] = 1.0;
            t[i * width + rhs] = sign * self.b[i];
        }
        // objective row holds reduced costs of "minimise the artificial sum"
        let obj = m * width;
        for i in 0..m {
            for j in 0..n {
                t[obj + j] -= t[i * width + j];
            }
            t[obj + rhs] -= t[i * width + rhs];
        }
        let mut basis: Vec<usize> = (n..n + m).collect();

        let cap = self.iteration_cap();
        let mut iterations = 0;
        loop {
            let Some(enter) = (0..n + m).find(|&j| t[obj + j] < -PIVOT_EPS) else {
                break;
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..m {
                let coef = t[i * width + enter];
                if coef <= PIVOT_EPS {
                    continue;
                }
                let ratio = t[i * width + rhs] / coef;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((r, best)) => {
                        if ratio < best - PIVOT_EPS
                            || (ratio <= best + PIVOT_EPS && basis[i] < basis[r])
                        {
                            Some((i, ratio))
                        } else {
                            Some((r, best))
                        }
                    }
                };
            }
            // the artificial objective is bounded below by zero
            let Some((row, _)) = leave else { break };
            iterations += 1;
            if iterations > cap {
                return Err(Error::SolverFailure { iterations: cap });
            }
            pivot(&mut t, width, m + 1, row, enter);
            basis[row] = enter;
        }

        let mut z = vec![0.0; n];
        for (i, &var) in basis.iter().enumerate() {
            if var < n {
                z[var] = t[i * width + rhs].max(0.0);
            }
        }
        Ok((self.residual(&z) <= tol).then_some(z))
    }
}

fn pivot(t: &mut [f64], width: usize, rows: usize, row: usize, col: usize) {
    let p = t[row * width + col];
    for v in &mut t[row * width..(row + 1) * width] {
        *v /= p;
    }
    for r in 0..rows {
        if r == row {
            continue;
        }
        let f = t[r * width + col];
        if f == 0.0 {
            continue;
        }
        for c in 0..width {
            t[r * width + c] -= f * t[row * width + c];
        }
        t[r * width + col] = 0.0;
    }
}
