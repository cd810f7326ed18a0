//! Fixtures shared by the benchmarks.

use num_complex::Complex64;
use signpoly::algorithms::DecompositionInput;
use signpoly::geometry::ConvexCombination;
use signpoly::quantum::{
    from_coords, validate_state, DensityMatrix, PureState, StateCoords, STATE_TOL,
};
use signpoly::EuclideanPoint;

/// A generic point with distinct, mixed-sign entries.
pub fn generic_point(n: usize) -> EuclideanPoint {
    let v = (0..n)
        .map(|i| {
            let x = 1.0 + i as f64 * 0.37;
            if i % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .collect();
    EuclideanPoint::new(v).unwrap()
}

/// A point inside the sign permutation polytope of `generic_point(n)`.
pub fn interior_probe(n: usize) -> EuclideanPoint {
    let a = generic_point(n);
    let mut v: Vec<f64> = a.coords().iter().rev().map(|x| -0.6 * x).collect();
    v.rotate_left(1);
    EuclideanPoint::new(v).unwrap()
}

/// Three-qubit amplitudes with four distinct nonzero entries.
pub fn w_example() -> PureState {
    let z = |re, im| Complex64::new(re, im);
    let amps = vec![
        z(0.0, 0.758),
        z(0.0, 0.0),
        z(0.809, -0.588),
        z(0.0, 0.0),
        z(0.0, 0.0),
        z(0.809, 0.588),
        z(0.0, 0.0),
        z(0.242, 0.0),
    ];
    PureState::normalized(amps).unwrap().0
}

fn state(d: usize, c: Vec<f64>) -> DensityMatrix {
    let c = StateCoords::new(EuclideanPoint::new(c).unwrap(), d).unwrap();
    validate_state(from_coords(&c), STATE_TOL).unwrap()
}

/// Maximally mixed target decomposed into `±r` along every coordinate axis,
/// with the members on the positive side tilted so the hull is not symmetric.
pub fn axis_decomposition(d: usize, r: f64) -> DecompositionInput {
    let n = d * d - 1;
    let mut members = Vec::with_capacity(2 * n);
    let mut weights = Vec::with_capacity(2 * n);
    for k in 0..n {
        let stretch = 1.0 + 0.25 * (k % 3) as f64;
        for (sign, w) in [(stretch, 1.0 / stretch), (-1.0, 1.0)] {
            let mut c = vec![0.0; n];
            c[k] = sign * r;
            members.push(state(d, c));
            weights.push(w);
        }
    }
    let total: f64 = weights.iter().sum();
    let weights = ConvexCombination::new(weights.iter().map(|w| w / total).collect()).unwrap();
    DecompositionInput::new(DensityMatrix::maximally_mixed(d), members, weights).unwrap()
}
