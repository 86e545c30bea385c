use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: tables, PD codes, JSON documents.
    #[error("format error: {0}")]
    Format(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    /// The algebraic structure is weaker than the operation requires.
    #[error("{0}")]
    Structure(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("move inapplicable: {0}")]
    MoveInapplicable(String),

    #[error("not a cycle: boundary is {0}")]
    NotACycle(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal invariant was violated (indicates a bug in the input diagram or the rack).
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
