use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// The invariant a candidate density matrix failed.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateViolation {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {0} is below 2")]
    TooSmall(usize),
    #[error("matrix is not Hermitian (max |M - M^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("trace is {trace}, expected 1")]
    BadTrace { trace: f64 },
    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("matrix has non-finite entries")]
    NonFinite,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point has no coordinates")]
    EmptyPoint,
    #[error("point has a non-finite coordinate at index {0}")]
    NonFinite(usize),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("enumeration of {count} vertices exceeds the cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
    #[error("simplex did not terminate within {iterations} iterations")]
    SolverFailure { iterations: usize },
    #[error("invalid density matrix: {0}")]
    InvalidState(#[from] StateViolation),
    #[error("pure state is not normalised (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
