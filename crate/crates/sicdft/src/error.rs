use thiserror::Error;

/// Errors produced by signal construction, validation and the transform
/// pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length {0} is not a perfect square")]
    NotASquare(usize),

    #[error("length {0} is not a power of two")]
    NotAPowerOfTwo(usize),

    #[error("signal must contain at least one sample")]
    EmptySignal,

    #[error("non-finite sample at index {0}")]
    NonFiniteSample(usize),

    #[error("compacted length {compacted} is not the square root of original length {original}")]
    CompactionMismatch { compacted: usize, original: usize },

    #[error("tone bin {bin} is out of range for length {n}")]
    ToneBinOutOfRange { bin: usize, n: usize },

    #[error("need at least {needed} distinct sizes, found {found}")]
    InsufficientData { needed: usize, found: usize },
}
