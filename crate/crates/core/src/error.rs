use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} for n = {n} exceeds the configured ceiling {ceiling}")]
    Capacity {
        what: &'static str,
        n: usize,
        ceiling: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("type {0} is not realised by even permutations")]
    NotAlternating(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exact division that must hold did not. Signals a transcription
    /// or internal error, never a user error.
    #[error("inexact division in {context}: {numerator} / {denominator}")]
    InexactDivision {
        context: String,
        numerator: String,
        denominator: String,
    },

    #[error("structural check failed for n = {n}: {detail}")]
    StructureViolation { n: usize, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
