use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside an operation's domain (wrong sizes, unsorted input, bad ranges).
    #[error("domain error: {0}")]
    Domain(String),

    /// A search or evaluation would exceed a configured size guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A request that is well-formed but not supported by the chosen construction.
    #[error("usage error: {0}")]
    Usage(String),

    /// An internal guarantee failed. Seeing this means a bug, not bad input.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
