use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
///
/// Refusals that are part of a normal answer (a decomposition that does not
/// exist, an undecided classifier verdict) are data, not errors.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element id {0} out of range")]
    BadElement(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not simple: {0}")]
    NotSimple(String),

    #[error("time budget exceeded")]
    TimeBudgetExceeded,

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("element {0} does not factor through the decomposition")]
    NotInSplit(usize),

    #[error("criterion preconditions failed: {0}")]
    PreconditionsFailed(String),

    #[error("{}: malformed line {line}: {reason}", path.display())]
    MalformedLine {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("i/o error on {}: {message}", path.display())]
    Io { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
