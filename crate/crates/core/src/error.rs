use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// Bad identifier, parameter name or configuration value.
    #[error("usage error: {0}")]
    Usage(String),
    /// A summation or quadrature exhausted its budget before reaching the tolerance.
    #[error("tolerance not reached: {0}")]
    ToleranceNotReached(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
