use thiserror::Error;

/// Everything that can go wrong while building operators, stepping schemes or
/// driving experiments.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero pivot encountered at row {index} during tridiagonal elimination")]
    ZeroPivot { index: usize },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid tridiagonal system: {0}")]
    InvalidSystem(String),

    #[error("implicit solve did not converge after {iterations} iterations (t={t}, x={x})")]
    NoConvergence { t: f64, x: f64, iterations: usize },

    #[error("t={t} is at or past the wave-breaking time {breaking}")]
    PostBreakingTime { t: f64, breaking: f64 },

    #[error("non-finite value at node {index}")]
    NonFinite { index: usize },

    #[error("moving frame singular at node {index}: lambda={lambda}")]
    FrameSingularity { index: usize, lambda: f64 },

    #[error("state too close to zero at node {index}: u={value}")]
    ZeroState { index: usize, value: f64 },

    #[error("t_final/tau = {ratio} is not a whole number of steps")]
    StepCountMismatch { ratio: f64 },

    #[error("scheme {scheme} is not available for {pde}")]
    UnsupportedScheme { scheme: String, pde: String },

    #[error("invalid configuration for `{field}`: {message}")]
    ConfigInvalid { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(field: &str, message: impl Into<String>) -> Self {
        Error::ConfigInvalid {
            field: field.to_string(),
            message: message.into(),
        }
    }

    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
