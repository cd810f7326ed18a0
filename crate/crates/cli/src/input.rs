//! State and decomposition files.
//!
//! Every file is a JSON document with `"schema": 1` and `"dim"`. A state is
//! given by exactly one of
//!
//! * `"matrix"`: `dim²` complex entries, row-major, each as `[re, im]`
//! * `"amplitudes"`: `dim` complex entries `[re, im]` of a state vector
//! * `"bloch"`: `dim²-1` reals in the Pauli convention (`|r| = 1` for pure qubits)
//! * `"coords"`: `dim²-1` reals in the isometric chart used for all geometry

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use signpoly::geometry::ConvexCombination;
use signpoly::quantum::{
    from_coords, to_coords, validate_state, CMatrix, DensityMatrix, PureState, StateCoords,
};
use signpoly::EuclideanPoint;

use crate::CliError;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateRepr {
    Matrix(Vec<[f64; 2]>),
    Amplitudes(Vec<[f64; 2]>),
    Bloch(Vec<f64>),
    Coords(Vec<f64>),
}

#[derive(Debug, Deserialize)]
struct StateFile {
    schema: u32,
    dim: usize,
    #[serde(flatten)]
    state: StateRepr,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionFile {
    schema: u32,
    dim: usize,
    target: StateRepr,
    members: Vec<StateRepr>,
    weights: Vec<f64>,
}

/// A parsed state together with the dimension it was declared with.
#[derive(Debug, Clone)]
pub struct StateInput {
    pub dim: usize,
    pub repr: StateRepr,
}

pub struct Decomposition {
    pub dim: usize,
    pub target: DensityMatrix,
    pub members: Vec<DensityMatrix>,
    pub weights: ConvexCombination,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn check_header(path: &Path, schema: u32, dim: usize) -> Result<(), CliError> {
    if schema != SCHEMA {
        return Err(CliError::Input(format!(
            "{}: unsupported schema {schema}, expected {SCHEMA}",
            path.display()
        )));
    }
    if dim < 2 {
        return Err(CliError::Input(format!(
            "{}: dim must be at least 2",
            path.display()
        )));
    }
    Ok(())
}

pub fn read_state(path: &Path) -> Result<StateInput, CliError> {
    let f: StateFile = parse(path)?;
    check_header(path, f.schema, f.dim)?;
    Ok(StateInput {
        dim: f.dim,
        repr: f.state,
    })
}

pub fn read_decomposition(path: &Path, tol: f64) -> Result<Decomposition, CliError> {
    let f: DecompositionFile = parse(path)?;
    check_header(path, f.schema, f.dim)?;
    let target = density(f.dim, &f.target, tol)?;
    let members = f
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            density(f.dim, m, tol).map_err(|e| CliError::Input(format!("member {i}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let weights = ConvexCombination::new(f.weights)?;
    Ok(Decomposition {
        dim: f.dim,
        target,
        members,
        weights,
    })
}

fn complex(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect()
}

fn expect_len(what: &str, found: usize, expected: usize) -> Result<(), CliError> {
    if found == expected {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "{what}: expected {expected} entries, found {found}"
        )))
    }
}

impl StateInput {
    pub fn density(&self, tol: f64) -> Result<DensityMatrix, CliError> {
        density(self.dim, &self.repr, tol)
    }

    /// Isometric coordinates of the state.
    pub fn coords(&self, tol: f64) -> Result<StateCoords, CliError> {
        let rho = self.density(tol)?;
        // coordinate inputs are returned verbatim rather than round-tripped
        match &self.repr {
            StateRepr::Coords(c) => {
                Ok(StateCoords::new(EuclideanPoint::new(c.clone())?, self.dim)?)
            }
            StateRepr::Bloch(b) => Ok(StateCoords::from_bloch(EuclideanPoint::new(b.clone())?)?),
            _ => Ok(to_coords(&rho)),
        }
    }

    /// Raw amplitudes and their norm. Only amplitude files qualify.
    pub fn pure(&self) -> Result<(PureState, f64), CliError> {
        match &self.repr {
            StateRepr::Amplitudes(a) => {
                expect_len("amplitudes", a.len(), self.dim)?;
                Ok(PureState::normalized(complex(a))?)
            }
            _ => Err(CliError::Input(
                "this command needs an \"amplitudes\" state".into(),
            )),
        }
    }

    pub fn has_amplitudes(&self) -> bool {
        matches!(self.repr, StateRepr::Amplitudes(_))
    }
}

fn density(dim: usize, repr: &StateRepr, tol: f64) -> Result<DensityMatrix, CliError> {
    let n = dim * dim - 1;
    let m = match repr {
        StateRepr::Matrix(entries) => {
            expect_len("matrix", entries.len(), dim * dim)?;
            CMatrix::from_row_slice(dim, dim, &complex(entries))
        }
        StateRepr::Amplitudes(a) => {
            expect_len("amplitudes", a.len(), dim)?;
            return Ok(PureState::normalized(complex(a))?.0.projector());
        }
        StateRepr::Bloch(b) => {
            expect_len("bloch", b.len(), n)?;
            from_coords(&StateCoords::from_bloch(EuclideanPoint::new(b.clone())?)?)
        }
        StateRepr::Coords(c) => {
            expect_len("coords", c.len(), n)?;
            from_coords(&StateCoords::new(EuclideanPoint::new(c.clone())?, dim)?)
        }
    };
    Ok(validate_state(m, tol)?)
}
