use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WgError {
    /// An argument outside the domain of an operation (bad size, index out of range).
    #[error("domain error: {0}")]
    Domain(String),
    /// Inversion of zero in a coefficient ring.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Evaluation of a rational function at one of its poles.
    #[error("pole at {at}: {what}")]
    Pole { at: String, what: String },
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// Reading or writing a cache file failed.
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = WgError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> WgError {
    WgError::Domain(msg.into())
}

pub(crate) fn parse_err(msg: impl Into<String>) -> WgError {
    WgError::Parse(msg.into())
}
