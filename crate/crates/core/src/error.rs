use thiserror::Error;

/// Errors shared across the evaluation pipeline.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The truncation budget cannot push the rigorous error bound below the
    /// requested tolerance.
    #[error("tolerance {requested:e} unreachable: best rigorous bound is {achievable:e}")]
    ToleranceUnreachable { requested: f64, achievable: f64 },

    /// A coarse-grid minimum landed on the search boundary, which signals a
    /// transcription bug rather than a usable optimum.
    #[error("optimization failure: {0}")]
    OptimizationFailure(String),

    /// Bisection preconditions not met: the objective difference has the same
    /// sign at both bracket ends.
    #[error("no sign change in [{low:e}, {high:e}]: diff(low)={diff_low:e}, diff(high)={diff_high:e}")]
    NoSignChange {
        low: f64,
        high: f64,
        diff_low: f64,
        diff_high: f64,
    },

    /// A report row contained non-finite numbers or could not be encoded.
    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
