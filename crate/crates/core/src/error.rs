use thiserror::Error;

/// Errors returned by the library.
///
/// `Domain` variants signal invalid input; `Internal` signals a violated
/// invariant inside an algorithm (a bug or an out-of-contract state).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word token could not be parsed.
    #[error("bad word token `{token}` at position {position}")]
    WordParse { token: String, position: usize },

    /// Arguments violate a precondition (coprimality, sign, range).
    #[error("invalid input: {0}")]
    Domain(String),

    /// The diagram parameters are not admissible.
    #[error("parameters are not admissible: {0}")]
    NotAdmissible(String),

    /// An internal invariant was violated.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True when the failure indicates a library bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
