use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),

    #[error("invalid reference: {0}")]
    InvalidReference(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("algebra is not finite-dimensional within the path-length bound {0}")]
    NotFiniteDimensional(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cutoff exceeded: {0}")]
    CutoffExceeded(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures caused by resolution cutoffs or transfer windows rather
    /// than by malformed input.
    pub fn is_computational(&self) -> bool {
        matches!(self, Error::CutoffExceeded(_) | Error::NotFiniteDimensional(_) | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
