//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid parameter {name}: {reason}")]
    Parameter { name: &'static str, reason: String },

    #[error("{name} must be strictly positive (got {value})")]
    Positivity { name: &'static str, value: f64 },

    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),

    #[error("missing {0} objective values for hypothesis {1}")]
    MissingValues(&'static str, usize),

    #[error("exact enumeration limited to n <= {limit}, got n = {n}")]
    TooLarge { limit: usize, n: usize },

    #[error("coordinate descent did not converge within {iters} sweeps")]
    NonConvergence { iters: usize, last_iterate: Vec<f64> },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }
}
