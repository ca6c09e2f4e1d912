use thiserror::Error;

use crate::letter::Letter;

/// Errors raised by word construction, enumeration and location.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("`{0}` is not a factor of the infinite Fibonacci word")]
    NotAFactor(String),

    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("truncated Fibonacci word g_{0} is undefined (index must be at least 2)")]
    TooShort(usize),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("domain {0} lies outside the word")]
    OutOfDomain(String),

    #[error("word is not Fibonacci-structured: {0}")]
    NotFibStructured(String),

    #[error("joint letter mismatch: expected `{expected}`, found `{found}`")]
    InconsistentJoint { expected: Letter, found: Letter },

    #[error("expected {expected} subwords as input, got {got}")]
    IncompleteInput { expected: usize, got: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("bad bounds: {0}")]
    BadBounds(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit status used by the command-line tool for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotAFactor(_) => 3,
            Error::NotFibStructured(_) => 4,
            Error::InconsistentJoint { .. } => 5,
            Error::ShapeMismatch(_) => 6,
            Error::OutOfDomain(_) => 7,
            Error::OutOfRange(_) | Error::TooShort(_) | Error::EmptyWord => 8,
            Error::BadBounds(_) => 9,
            Error::Parse(_) | Error::InvalidAlphabet(_) => 10,
            Error::IncompleteInput { .. } => 11,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
