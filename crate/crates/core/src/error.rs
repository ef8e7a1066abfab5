use thiserror::Error;

/// Errors surfaced by operations with checked preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("partition has an even part: {0}")]
    NotOdd(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid multirectangular coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("invalid bicolored graph: {0}")]
    InvalidGraph(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
