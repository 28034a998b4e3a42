//! Error type shared across the crate.
//!
//! Three classes matter to callers: bad inputs (CLI exit 2), inconsistent
//! internal state that indicates a bug rather than bad data (CLI exit 3), and
//! the one recoverable condition a caller is expected to match on,
//! [`Error::NoSolution`] from linear solving. Verdict failures (a check that
//! ran fine and answered "no") are not errors; they are ordinary results.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Input(String),

    /// The right-hand side is not in the image of the matrix.
    #[error("linear system has no solution")]
    NoSolution,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
