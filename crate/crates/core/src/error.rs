use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Resampling hit its iteration cap; the caller may retry with a larger
    /// palette.
    #[error("resampling cap exceeded after {resamples} resamples at palette size {palette}")]
    ResampleCap { resamples: usize, palette: usize },

    /// A structural precondition the pipeline is supposed to establish did
    /// not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Exact verification exhausted its node-expansion budget. Distinct from
    /// a negative verdict: nothing was decided.
    #[error("verification inconclusive for pair ({u}, {v}): expansion budget {budget} exhausted")]
    Inconclusive { u: usize, v: usize, budget: u64 },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
