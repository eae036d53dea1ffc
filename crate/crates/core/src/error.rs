use alloc::vec::Vec;

/// Errors raised when constructing or combining the combinatorial objects of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u8>),
    #[error("permutation too large: n = {0} exceeds 255")]
    TooLarge(usize),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("composition parts must be positive: {0:?}")]
    BadComposition(Vec<usize>),
    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    BadPartition(Vec<usize>),
    #[error("shape does not sum to n: shape sums to {shape_sum}, n = {n}")]
    ShapeSumMismatch { shape_sum: usize, n: usize },
    #[error("generator index {index} out of range 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a standard tableau: {0}")]
    NotStandard(&'static str),
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("empty cell")]
    EmptyCell,
    #[error("n = {n} exceeds the ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
