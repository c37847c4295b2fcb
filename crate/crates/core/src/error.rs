use thiserror::Error;

/// Everything that can go wrong while building states or evaluating quantities.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension must be at least 2 (got {0})")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} needs a second operator")]
    MissingOperator(&'static str),

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("density matrix is not Hermitian (max |rho - rho^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("density matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("density matrix trace is {0} (expected 1)")]
    BadTrace(f64),

    #[error("invalid exponents alpha = {alpha}, beta = {beta} (need alpha, beta >= 0, alpha + beta <= 1)")]
    InvalidParams { alpha: f64, beta: f64 },

    #[error("matrix power exponent {0} outside [0, 1]")]
    InvalidExponent(f64),

    #[error(
        "{quantity} evaluated to {value:e}, below the round-off floor for a nonnegative quantity"
    )]
    NegativeValue { quantity: &'static str, value: f64 },

    #[error("numerical inconsistency in {what}: {first:e} vs {second:e}")]
    NumericalInconsistency {
        what: &'static str,
        first: f64,
        second: f64,
    },

    #[error("scalar inputs must be finite and nonnegative (x = {x}, y = {y})")]
    InvalidScalar { x: f64, y: f64 },

    #[error("(alpha, beta) = ({alpha}, {beta}) is outside the lemma hypothesis")]
    ParamsOutsideLemmaDomain { alpha: f64, beta: f64 },

    #[error("(alpha, beta) = ({alpha}, {beta}) is outside the theorem hypothesis")]
    ParamsOutsideTheoremDomain { alpha: f64, beta: f64 },

    #[error("family parameter {0} outside [0, 1]")]
    ParamOutOfRange(f64),

    #[error("rank {rank} invalid for dimension {dim}")]
    BadRank { rank: usize, dim: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
