use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("mode error: {0}")]
    Mode(String),

    #[error("kind violation: {0}")]
    KindViolation(String),

    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("polynomial is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("generator {name} is not an identity: {detail}")]
    NotAnIdentity { name: String, detail: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed expression: {0}")]
    Malformed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
