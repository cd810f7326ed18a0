#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use signpoly::geometry::enumerate_perm_vertices;
use signpoly::quantum::{validate_state, CMatrix, DensityMatrix, PureState, STATE_TOL};
use signpoly::EuclideanPoint;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn point(v: &[f64]) -> EuclideanPoint {
    EuclideanPoint::new(v.to_vec()).unwrap()
}

pub fn uniform_point(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> EuclideanPoint {
    point(&(0..n).map(|_| rng.gen_range(lo..hi)).collect::<Vec<_>>())
}

/// Mixed state `G G† / Tr(G G†)` from a complex Ginibre matrix.
pub fn random_state(rng: &mut ChaCha8Rng, d: usize) -> DensityMatrix {
    let g = CMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    validate_state(m.scale(1.0 / tr), STATE_TOL).unwrap()
}

pub fn random_pure(rng: &mut ChaCha8Rng, d: usize) -> PureState {
    let amps = (0..d)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    PureState::normalized(amps).unwrap().0
}

pub fn random_weights(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..1.0)).collect();
    let s: f64 = w.iter().sum();
    w.into_iter().map(|x| x / s).collect()
}

/// A point on the affine hull of the permutahedron of `a`: a random point
/// on a chord between two vertices, pushed towards or away from the
/// centroid by a random factor, so a fair share of samples fall outside.
pub fn permutahedron_probe(rng: &mut ChaCha8Rng, a: &EuclideanPoint) -> EuclideanPoint {
    let verts = enumerate_perm_vertices(a);
    let pick = |rng: &mut ChaCha8Rng| verts.points()[rng.gen_range(0..verts.len())].clone();
    let (u, v) = (pick(rng), pick(rng));
    let t = rng.gen_range(0.0..1.0);
    let inner = &u.scale(t) + &v.scale(1.0 - t);
    let n = a.dim() as f64;
    let centroid = point(&vec![a.sum() / n; a.dim()]);
    let stretch = rng.gen_range(0.5..1.5);
    &centroid + &(&inner - &centroid).scale(stretch)
}

/// Every signed permutation of `a` by brute force, deduplicated on exact
/// bit patterns (with `-0.0` folded into `0.0`).
pub fn brute_force_signed_vertices(a: &EuclideanPoint) -> Vec<EuclideanPoint> {
    let n = a.dim();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        for mask in 0..(1u32 << n) {
            let v: Vec<f64> = (0..n)
                .map(|i| {
                    let s = if mask >> i & 1 == 1 { -1.0 } else { 1.0 };
                    s * a[perm[i]] + 0.0
                })
                .collect();
            if seen.insert(v.iter().map(|x| x.to_bits()).collect::<Vec<_>>()) {
                out.push(point(&v));
            }
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    out
}

fn next_perm(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Rejection estimate of the volume of `conv{±α e_i}`: uniform samples
/// from `[-α, α]^n` accepted when `‖x‖₁ <= α`. Returns (estimate, standard
/// error).
pub fn monte_carlo_cross_volume(
    rng: &mut ChaCha8Rng,
    n: usize,
    alpha: f64,
    samples: usize,
) -> (f64, f64) {
    let mut hits = 0usize;
    for _ in 0..samples {
        let s: f64 = (0..n).map(|_| rng.gen_range(-alpha..alpha).abs()).sum();
        if s <= alpha {
            hits += 1;
        }
    }
    let box_vol = (2.0 * alpha).powi(n as i32);
    let p = hits as f64 / samples as f64;
    (
        box_vol * p,
        box_vol * (p * (1.0 - p) / samples as f64).sqrt(),
    )
}

/// Cayley's hyperdeterminant as the discriminant of the binary quadratic
/// `det(A + tB)` with `A = ψ_0jk`, `B = ψ_1jk`.
pub fn tangle_by_discriminant(psi: &PureState) -> f64 {
    let p = psi.amplitudes();
    let (a00, a01, a10, a11) = (p[0], p[1], p[2], p[3]);
    let (b00, b01, b10, b11) = (p[4], p[5], p[6], p[7]);
    let det_a = a00 * a11 - a01 * a10;
    let det_b = b00 * b11 - b01 * b10;
    let mixed = a00 * b11 + b00 * a11 - a01 * b10 - b01 * a10;
    4.0 * (mixed * mixed - 4.0 * det_a * det_b).norm()
}

/// The printed random W state: nonzero amplitudes at basis indices
/// 0, 2, 5, 7 (unnormalised).
pub fn example_w_amplitudes() -> Vec<Complex64> {
    let mut amps = vec![Complex64::default(); 8];
    amps[0] = Complex64::new(0.0, 0.758);
    amps[2] = Complex64::new(0.809, -0.588);
    amps[5] = Complex64::new(0.809, 0.588);
    amps[7] = Complex64::new(0.242, 0.0);
    amps
}
