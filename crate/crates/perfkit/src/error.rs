//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by perfkit operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A note violates the domain invariants (pitch/velocity range, times).
    #[error("invalid note: {0}")]
    InvalidNote(String),

    /// An operation received an empty input it cannot work with.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Matrix or vector dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A statistical model was used before being fitted.
    #[error("model not fitted: {0}")]
    NotFitted(String),

    /// An exhaustive search would exceed the configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A referenced note, pitch or cell is absent from the data.
    #[error("not found: {0}")]
    NotFound(String),

    /// File or stream I/O failed.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed JSON or CSV content.
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}
