//! `signpoly`: sign permutation polytopes and quantum cross-polytopes from the
//! command line.
//!
//! Exit codes: 0 success or member, 1 non-member, 2 input error, 3 enumeration
//! cap exceeded.

mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use report::Format;
use signpoly::geometry::DEFAULT_ENUMERATION_CAP;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] signpoly::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(signpoly::Error::EnumerationTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "signpoly",
    version,
    about = "Sign permutation polytopes and quantum cross-polytopes"
)]
struct Cli {
    /// Numerical tolerance for membership, positivity and tangle tests.
    #[arg(long, global = true, default_value_t = signpoly::DEFAULT_TOL)]
    tol: f64,
    /// Bisection tolerance on alpha.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_alpha: f64,
    /// Maximum number of signed permutations to enumerate.
    #[arg(long, global = true, env = "SIGNPOLY_CAP", default_value_t = DEFAULT_ENUMERATION_CAP as u64)]
    cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized estimates.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Permute the state's coordinate vector.
    Bloch,
    /// Permute the state-vector amplitudes.
    Amplitudes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    AnyPure,
    WType,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the signed permutations of a state and keep the valid ones.
    Enumerate {
        state_file: PathBuf,
        /// Defaults to `amplitudes` for amplitude files and `bloch` otherwise.
        #[arg(long, value_enum)]
        target: Option<Target>,
        #[arg(long, value_enum, default_value_t = Filter::AnyPure)]
        filter: Filter,
        /// Include every retained vertex in the report.
        #[arg(long)]
        vertices: bool,
    },
    /// Find the largest cross-polytope about a target inside a decomposition.
    Construct { decomposition_file: PathBuf },
    /// Test whether a probe state lies in the cross-polytope about a center.
    Check {
        center_file: PathBuf,
        probe_file: PathBuf,
        #[arg(long)]
        alpha: f64,
    },
    /// Cross-polytope volume and robustness fraction for d-level states.
    Volume {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        alpha: f64,
        /// Also estimate the volume by Monte Carlo with this many samples.
        #[arg(long)]
        samples: Option<u64>,
    },
    /// 3-tangle of a three-qubit state vector.
    Tangle { state_file: PathBuf },
}

/// Validated global settings.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub tol: f64,
    pub tol_alpha: f64,
    pub cap: u128,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::Input(format!(
                    "--{name} must be positive, got {v}"
                )))
            }
        };
        if cli.cap < 1 {
            return Err(CliError::Input("--cap must be at least 1".into()));
        }
        Ok(Self {
            tol: positive("tol", cli.tol)?,
            tol_alpha: positive("tol-alpha", cli.tol_alpha)?,
            cap: cli.cap as u128,
            format: cli.format,
            seed: cli.seed,
        })
    }
}

fn run(cli: Cli) -> Result<(report::Report, u8), CliError> {
    let cfg = RunConfig::new(&cli)?;
    match cli.command {
        Command::Enumerate {
            state_file,
            target,
            filter,
            vertices,
        } => commands::enumerate(&cfg, &state_file, target, filter, vertices).map(|r| (r, 0)),
        Command::Construct { decomposition_file } => {
            commands::construct(&cfg, &decomposition_file).map(|r| (r, 0))
        }
        Command::Check {
            center_file,
            probe_file,
            alpha,
        } => commands::check(&cfg, &center_file, &probe_file, alpha),
        Command::Volume {
            dim,
            alpha,
            samples,
        } => commands::volume(&cfg, dim, alpha, samples).map(|r| (r, 0)),
        Command::Tangle { state_file } => commands::tangle(&cfg, &state_file).map(|r| (r, 0)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((report, code)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{}", report.render(format));
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
