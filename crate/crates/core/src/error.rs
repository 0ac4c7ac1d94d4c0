use thiserror::Error;

/// Errors raised by constructors, enumerations, and certificate checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),

    #[error("unknown element identifier `{0}`")]
    UnknownElement(String),

    /// A configurable size cap was hit; the computation was abandoned, not truncated.
    #[error("guard `{name}` exceeded: {value} > {limit}")]
    Guard {
        name: &'static str,
        limit: usize,
        value: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// An internal certificate failed. For the constructions in this crate this
    /// always points at an implementation bug.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("instance parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
