//! Error type shared by every module of the engine.

use alloc::string::String;
use core::fmt;

/// Engine-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the engine.
///
/// `Internal` signals a violated invariant (e.g. an inexact polynomial
/// division where exactness is guaranteed by theory); it always indicates a
/// bug rather than bad input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input.
    InvalidInput(String),
    /// A configured enumeration or dimension bound was exceeded.
    Capacity(String),
    /// Internal consistency violation.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity exceeded: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}
