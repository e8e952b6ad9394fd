use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must lie in 1..={max}, got {got}")]
    InvalidRank { got: u32, max: u32 },

    #[error("index {index} is out of range for rank {d}")]
    IndexOutOfRange { index: u32, d: u32 },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },

    #[error("subset {0} is not strict (it is the whole affine node set)")]
    NotStrict(String),

    #[error("subset {0} is not classical (it contains the affine node 0)")]
    NotClassical(String),

    #[error("cannot parse subset from {input:?}: {reason}")]
    ParseSubset { input: String, reason: String },

    #[error("not a permutation of 0..{d}: {images:?}")]
    NotAPermutation { d: u32, images: Vec<u32> },

    #[error("malformed Weil-Deligne data: {0}")]
    MalformedWd(String),

    #[error("invalid arithmetic parameters: {0}")]
    InvalidParams(String),

    #[error("{0}")]
    OutOfBounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
