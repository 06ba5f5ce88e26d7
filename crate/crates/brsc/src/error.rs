//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by constructors, operators and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violates a mathematical precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is larger than the representation supports.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// A bounded search ran out of nodes before finishing.
    #[error("budget exhausted after {nodes} nodes")]
    Budget { nodes: u64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Parse(_) => 2,
            Error::Capacity(_) | Error::Budget { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
