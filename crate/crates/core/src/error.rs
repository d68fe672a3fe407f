use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra routines.
///
/// Everything that can go wrong is a contract violation on the inputs; the
/// computations themselves are total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A weight was not nonincreasing (or, for `Sp`, had a negative entry).
    NotDominant(String),
    /// Two weights (or a weight and a space) disagree on the rank.
    RankMismatch { expected: usize, found: usize },
    /// Weight text did not match `U[a,b,...]` with optional `(t)`.
    Parse(String),
    /// A space `IGr(k, m)` with invalid parameters.
    InvalidSpace { k: u32, n: u32 },
    /// An operation was called outside its documented domain.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::Parse(msg) => write!(f, "cannot parse weight: {msg}"),
            Error::InvalidSpace { k, n } => write!(f, "invalid space parameters k={k}, n={n}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
