//! Maximal inscribed quantum cross-polytopes and robustness fractions.

mod construct;
mod robustness;

pub use construct::{
    cross_polytope_contained, max_inscribed_cross_polytope, ConstructOptions, DecompositionInput,
    QuantumCrossPolytope,
};
pub use robustness::{
    hs_volume, insphere_report, robustness_fraction, robustness_member, InsphereReport,
};
