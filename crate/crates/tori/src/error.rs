use thiserror::Error;

/// Error type shared by all modules.
///
/// `Parameter` maps to CLI exit code 2, `Budget` to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: bad rank, malformed class string, unknown label, ...
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A computation would exceed a size cap (field degree, enumeration
    /// budget, matrix dimension).
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// The operation is deliberately not provided for these inputs
    /// (e.g. closed-form centralizer orders for twisted families).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A verification check failed; the message names the check.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
    pub fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}
