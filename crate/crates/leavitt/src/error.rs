//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad input: malformed text, unknown identifiers, contract violations.
    #[error("{0}")]
    Input(String),

    /// Syntax error with source position (1-based line and column).
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A bounded search or closure ran out of budget without deciding.
    #[error("{0}")]
    Undecided(String),

    /// Broken internal invariant; always a bug.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(message: impl Into<String>) -> Error {
        Error::Input(message.into())
    }

    pub fn undecided(message: impl Into<String>) -> Error {
        Error::Undecided(message.into())
    }

    pub fn internal(message: impl Into<String>) -> Error {
        Error::Internal(message.into())
    }

    /// Process exit code contract: 1 input, 2 undecided, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } => 1,
            Error::Undecided(_) => 2,
            Error::Internal(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
