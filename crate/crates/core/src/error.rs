use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("not a genuine character: {0}")]
    NotACharacter(String),
    #[error("V({tail}) is undefined at n = {n}")]
    UndefinedAtN { n: usize, tail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
