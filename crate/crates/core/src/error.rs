use thiserror::Error;

/// Errors raised by library operations.
///
/// `Precondition` marks a violated mathematical hypothesis on the input; the
/// remaining variants either reject malformed input or flag an internal
/// invariant that failed at runtime.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition `{name}` violated: {detail}")]
    Precondition { name: &'static str, detail: String },
    #[error("non-integral coefficient: {0}")]
    NonIntegral(String),
    #[error("rewrite limit exceeded: {0}")]
    RewriteLimit(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("elimination failed: {0}")]
    Elimination(String),
}

impl Error {
    pub fn precondition(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition { name, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
