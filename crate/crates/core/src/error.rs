use thiserror::Error;

/// Errors produced while building or querying an index.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument or input violated a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A select query asked for an occurrence that does not exist.
    #[error("not found: {0}")]
    NotFound(String),
    /// The build-time self test disagreed with the brute-force oracle.
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidInput(format!($($arg)*))
    };
}

pub(crate) use invalid;
