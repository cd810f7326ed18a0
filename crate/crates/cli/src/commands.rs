use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use signpoly::algorithms::{
    hs_volume, insphere_report, max_inscribed_cross_polytope, robustness_fraction,
    robustness_member, ConstructOptions, DecompositionInput,
};
use signpoly::geometry::cross_polytope_volume;
use signpoly::quantum::{
    enumerate_bloch_sign_perms, enumerate_pure_sign_perms, hs_distance, three_tangle, to_coords,
    PureFilter,
};

use crate::input::{read_decomposition, read_state};
use crate::report::Report;
use crate::{CliError, Filter, RunConfig, Target};

fn count(n: u128) -> Value {
    u64::try_from(n)
        .map(Value::from)
        .unwrap_or_else(|_| n.to_string().into())
}

fn non_negative(name: &str, v: f64) -> Result<f64, CliError> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Input(format!(
            "--{name} must be non-negative, got {v}"
        )))
    }
}

/// Robustness fraction by the closed form and by the volume ratio.
fn fractions(report: Report, d: usize, alpha: f64) -> Result<Report, CliError> {
    let by_ratio = cross_polytope_volume(d * d - 1, alpha) / hs_volume(d)?;
    Ok(report
        .field("fraction", robustness_fraction(d, alpha))
        .field("fraction_by_volume_ratio", by_ratio))
}

pub fn enumerate(
    cfg: &RunConfig,
    path: &Path,
    target: Option<Target>,
    filter: Filter,
    with_vertices: bool,
) -> Result<Report, CliError> {
    let state = read_state(path)?;
    let target = target.unwrap_or(if state.has_amplitudes() {
        Target::Amplitudes
    } else {
        Target::Bloch
    });
    let pure_filter = match filter {
        Filter::AnyPure => PureFilter::AnyPure,
        Filter::WType => PureFilter::WType,
    };
    let (enumerated, vertices, extra): (u128, Vec<Value>, Vec<(&str, Value)>) = match target {
        Target::Amplitudes => {
            let (psi, norm) = state.pure()?;
            let e = enumerate_pure_sign_perms(&psi, pure_filter, cfg.tol, cfg.cap)?;
            let mut extra = vec![("input_norm", norm.into())];
            if psi.dim() == 8 {
                extra.push(("input_tangle", three_tangle(&psi)?.into()));
            }
            let v = e
                .retained
                .iter()
                .map(|p| {
                    json!(p
                        .amplitudes()
                        .iter()
                        .map(|z| [z.re, z.im])
                        .collect::<Vec<_>>())
                })
                .collect();
            (e.enumerated, v, extra)
        }
        Target::Bloch => {
            let coords = state.coords(cfg.tol)?;
            let e = enumerate_bloch_sign_perms(&coords, pure_filter, cfg.tol, cfg.cap)?;
            let v = e
                .retained
                .iter()
                .map(|c| json!(c.bloch().coords()))
                .collect();
            (e.enumerated, v, Vec::new())
        }
    };
    let retained = vertices.len();
    let mut report = Report::new(
        "enumerate",
        format!("enumerated {enumerated}, retained {retained} ({retained} vertices)"),
    )
    .field("dim", state.dim)
    .field("target", format!("{target:?}").to_lowercase())
    .field(
        "filter",
        if filter == Filter::WType {
            "w-type"
        } else {
            "any-pure"
        },
    )
    .field("enumerated", count(enumerated))
    .field("retained", retained);
    for (k, v) in extra {
        report = report.field(k, v);
    }
    if with_vertices {
        report = report.field("vertices", vertices);
    }
    Ok(report)
}

pub fn construct(cfg: &RunConfig, path: &Path) -> Result<Report, CliError> {
    let dec = read_decomposition(path, cfg.tol)?;
    let members = dec.members.len();
    let input = DecompositionInput::new(dec.target, dec.members, dec.weights)?;
    let opts = ConstructOptions {
        tol_alpha: cfg.tol_alpha,
        hull_tol: cfg.tol,
    };
    let qcp = max_inscribed_cross_polytope(input, opts)?;
    let alpha = qcp.alpha();
    let states = qcp.vertex_states();
    let valid = states.iter().filter(|s| s.is_ok()).count();
    let summary = if qcp.is_degenerate() {
        "alpha = 0 (degenerate: the target is not interior to the members' hull)".to_string()
    } else {
        format!("alpha = {alpha}")
    };
    let ins = insphere_report(dec.dim, alpha);
    let report = Report::new("construct", summary)
        .field("dim", dec.dim)
        .field("members", members)
        .field("alpha", alpha)
        .field("degenerate", qcp.is_degenerate())
        .field("edge_length", qcp.edge_length())
        .field("volume", qcp.volume())
        .field("insphere_radius", qcp.insphere_radius())
        .field("insphere_volume_ratio", ins.ratio)
        .field("bisection_steps", qcp.bisection_steps())
        .field("vertices", states.len())
        .field("valid_vertices", valid);
    fractions(report, dec.dim, alpha)
}

pub fn check(
    cfg: &RunConfig,
    center: &Path,
    probe: &Path,
    alpha: f64,
) -> Result<(Report, u8), CliError> {
    let alpha = non_negative("alpha", alpha)?;
    let center = read_state(center)?.density(cfg.tol)?;
    let probe = read_state(probe)?.density(cfg.tol)?;
    let member = robustness_member(&probe, &center, alpha, cfg.tol)?;
    let offset = to_coords(&probe).point() - to_coords(&center).point();
    let report = Report::new("check", if member { "member" } else { "non-member" })
        .field("dim", center.dim())
        .field("alpha", alpha)
        .field("member", member)
        .field("hs_distance", hs_distance(&probe, &center)?)
        .field("offset_norm1", offset.norm1());
    Ok((
        fractions(report, center.dim(), alpha)?,
        if member { 0 } else { 1 },
    ))
}

pub fn volume(
    cfg: &RunConfig,
    d: usize,
    alpha: f64,
    samples: Option<u64>,
) -> Result<Report, CliError> {
    if d < 2 {
        return Err(CliError::Input(format!(
            "--dim must be at least 2, got {d}"
        )));
    }
    let alpha = non_negative("alpha", alpha)?;
    let n = d * d - 1;
    let cross = cross_polytope_volume(n, alpha);
    let ins = insphere_report(d, alpha);
    let mut report = Report::new(
        "volume",
        format!("volume {cross}, fraction {}", robustness_fraction(d, alpha)),
    )
    .field("dim", d)
    .field("coordinates", n)
    .field("alpha", alpha)
    .field("cross_polytope_volume", cross)
    .field("hs_volume", hs_volume(d)?)
    .field("insphere_radius", ins.radius)
    .field("insphere_volume", ins.ball_volume)
    .field("insphere_volume_ratio", ins.ratio)
    .field("insphere_ratio_estimate", ins.approx_ratio);
    report = fractions(report, d, alpha)?;
    if let Some(samples) = samples {
        if samples == 0 {
            return Err(CliError::Input("--samples must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let hits = (0..samples)
            .filter(|_| {
                (0..n)
                    .map(|_| rng.gen_range(-alpha..=alpha).abs())
                    .sum::<f64>()
                    <= alpha
            })
            .count();
        let p = hits as f64 / samples as f64;
        let cube = (2.0 * alpha).powi(n as i32);
        let se = cube * (p * (1.0 - p) / samples as f64).sqrt();
        report = report
            .field("seed", cfg.seed)
            .field("mc_samples", samples)
            .field("mc_volume", cube * p)
            .field("mc_std_error", se);
        if se > 0.0 {
            report = report.field("mc_deviation_sigma", (cube * p - cross) / se);
        }
    }
    Ok(report)
}

pub fn tangle(cfg: &RunConfig, path: &Path) -> Result<Report, CliError> {
    let (psi, norm) = read_state(path)?.pure()?;
    let tau = three_tangle(&psi)?;
    Ok(Report::new("tangle", format!("tau3 = {tau}"))
        .field("tangle", tau)
        .field("input_norm", norm)
        .field("vanishing", tau <= cfg.tol))
}
