use thiserror::Error;

use crate::flips::FlipFamily;
use crate::objects::Kind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed text: {0}")]
    MalformedText(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("duplicate object at positions {first} and {second}")]
    DuplicateObject { first: usize, second: usize },
    #[error("objects have mixed sizes: {0}")]
    MixedSizes(String),
    #[error("flip `{flip}` does not apply to kind `{kind}`")]
    InapplicableFlip { kind: Kind, flip: FlipFamily },
    #[error("object of kind `{found}` where `{expected}` was expected")]
    KindMismatch { expected: Kind, found: Kind },
    #[error("size mismatch between compared objects")]
    SizeMismatch,
    #[error("search budget of {budget} nodes exhausted")]
    ResourceLimit { budget: u64 },
    #[error("instance has {m} objects, above the brute-force bound {bound}")]
    BoundExceeded { m: usize, bound: usize },
    #[error("bad certificate indices: {0}")]
    BadIndices(String),
    #[error("tuple list is not continuous")]
    NotContinuous,
    #[error("tuple list is a no-instance (gap in coordinate {case} at {gap})")]
    NoInstance { case: u8, gap: u64 },
    #[error("empty instance")]
    EmptyInstance,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
