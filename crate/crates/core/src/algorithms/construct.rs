use crate::geometry::{hull_member_lp, ConvexCombination, CrossPolytopeSpec, VertexSet};
use crate::quantum::{
    from_coords, hs_norm, to_coords, validate_state, DensityMatrix, StateCoords, STATE_TOL,
};
use crate::{Error, EuclideanPoint, Result, DEFAULT_TOL};

/// A target state together with a convex decomposition into member states.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionInput {
    target: DensityMatrix,
    members: Vec<DensityMatrix>,
    weights: ConvexCombination,
}

impl DecompositionInput {
    pub const RESIDUAL_TOL: f64 = 1e-8;

    /// Requires more than `d² - 1` members of one dimension and
    /// `‖Σ λ_i ρ_i − ρ‖_HS <= 1e-8`.
    pub fn new(
        target: DensityMatrix,
        members: Vec<DensityMatrix>,
        weights: ConvexCombination,
    ) -> Result<Self> {
        let d = target.dim();
        let n = d * d - 1;
        if members.len() <= n {
            return Err(Error::InvalidDecomposition(format!(
                "{} members at d = {d}; need more than {n}",
                members.len()
            )));
        }
        if weights.weights().len() != members.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} weights for {} members",
                weights.weights().len(),
                members.len()
            )));
        }
        if let Some(bad) = members.iter().find(|m| m.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.dim(),
            });
        }
        let mut recon = target.matrix().scale(0.0);
        for (w, m) in weights.weights().iter().zip(&members) {
            recon += m.matrix().scale(*w);
        }
        let residual = hs_norm(&(recon - target.matrix()));
        if residual > Self::RESIDUAL_TOL {
            return Err(Error::InvalidDecomposition(format!(
                "reconstruction residual {residual:e} exceeds {:e}",
                Self::RESIDUAL_TOL
            )));
        }
        Ok(Self {
            target,
            members,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.target.dim()
    }

    pub fn target(&self) -> &DensityMatrix {
        &self.target
    }

    pub fn members(&self) -> &[DensityMatrix] {
        &self.members
    }

    pub fn weights(&self) -> &ConvexCombination {
        &self.weights
    }

    /// Member coordinates translated so that the target sits at the origin.
    pub fn translated_members(&self) -> Result<VertexSet> {
        let center = to_coords(&self.target);
        VertexSet::new(
            self.members
                .iter()
                .map(|m| to_coords(m).point() - center.point())
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructOptions {
    /// Absolute bisection tolerance on `α`.
    pub tol_alpha: f64,
    /// Residual tolerance of each hull-membership LP.
    pub hull_tol: f64,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        Self {
            tol_alpha: 1e-8,
            hull_tol: DEFAULT_TOL,
        }
    }
}

/// The cross-polytope `ρ̃ + conv{±α e_k}` found inside a decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumCrossPolytope {
    spec: CrossPolytopeSpec,
    input: DecompositionInput,
    bisection_steps: usize,
}

impl QuantumCrossPolytope {
    pub fn spec(&self) -> &CrossPolytopeSpec {
        &self.spec
    }

    pub fn input(&self) -> &DecompositionInput {
        &self.input
    }

    pub fn alpha(&self) -> f64 {
        self.spec.scale()
    }

    /// `α = 0`: the target lies on the boundary of its decomposition hull.
    pub fn is_degenerate(&self) -> bool {
        self.alpha() == 0.0
    }

    pub fn edge_length(&self) -> f64 {
        self.spec.edge_length()
    }

    pub fn volume(&self) -> f64 {
        self.spec.volume()
    }

    pub fn insphere_radius(&self) -> f64 {
        self.spec.insphere_radius()
    }

    pub fn bisection_steps(&self) -> usize {
        self.bisection_steps
    }

    /// The `2(d² - 1)` vertices mapped back to matrices and validated.
    pub fn vertex_states(&self) -> Vec<Result<DensityMatrix>> {
        let d = self.input.dim();
        self.spec
            .vertices()
            .iter()
            .map(|v| {
                let c = StateCoords::new(v.clone(), d)?;
                validate_state(from_coords(&c), STATE_TOL)
            })
            .collect()
    }
}

/// Whether every vertex `±α e_k` lies in `conv(members)`.
pub fn cross_polytope_contained(members: &VertexSet, alpha: f64, tol: f64) -> Result<bool> {
    let n = members.dim();
    if alpha == 0.0 {
        return Ok(hull_member_lp(&EuclideanPoint::zeros(n), members, tol)?.is_some());
    }
    for k in 0..n {
        for s in [alpha, -alpha] {
            if hull_member_lp(&EuclideanPoint::axis(n, k, s), members, tol)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest `α` (to within `tol_alpha`) such that the cross-polytope of
/// scale `α` centred on the target fits in the hull of the members.
///
/// Containment is monotone in `α` because the hull is convex and contains
/// the origin, so bisection over `[0, max_i ‖ρ̃_i − ρ̃‖₂]` is exact to the
/// tolerance. The upper end is safe since the hull lies inside that ball.
pub fn max_inscribed_cross_polytope(
    input: DecompositionInput,
    opts: ConstructOptions,
) -> Result<QuantumCrossPolytope> {
    if !(opts.tol_alpha > 0.0) || !(opts.hull_tol > 0.0) {
        return Err(Error::InvalidArgument("tolerances must be positive".into()));
    }
    let members = input.translated_members()?;
    let center = to_coords(input.target()).point().clone();
    let finish = |alpha: f64, steps: usize, input: DecompositionInput| {
        Ok(QuantumCrossPolytope {
            spec: CrossPolytopeSpec::new(center.clone(), alpha)?,
            input,
            bisection_steps: steps,
        })
    };

    let mut hi = members
        .iter()
        .map(EuclideanPoint::norm2)
        .fold(0.0, f64::max);
    if hi == 0.0 || !cross_polytope_contained(&members, 0.0, opts.hull_tol)? {
        return finish(0.0, 0, input);
    }
    if cross_polytope_contained(&members, hi, opts.hull_tol)? {
        return finish(hi, 0, input);
    }
    let mut lo = 0.0;
    let mut steps = 0;
    while hi - lo > opts.tol_alpha {
        let mid = 0.5 * (lo + hi);
        if cross_polytope_contained(&members, mid, opts.hull_tol)? {
            lo = mid;
        } else {
            hi = mid;
        }
        steps += 1;
    }
    finish(lo, steps, input)
}
