use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("invalid crystal operator index {index} for rank {rank}")]
    InvalidIndex { index: usize, rank: usize },
    #[error("invalid letter {letter} for rank {rank}")]
    InvalidLetter { letter: i32, rank: usize },
    #[error("odd doubled coordinate in {0:?}")]
    Parity(Vec<i64>),
    #[error("computation cap exceeded: {0}")]
    CapExceeded(String),
    #[error("word is not a highest weight vertex at step {0}")]
    InvalidStep(usize),
    #[error("invalid signed permutation {0:?}")]
    InvalidSignedPerm(Vec<i32>),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
