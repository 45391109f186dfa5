use thiserror::Error;

/// Errors raised by coloring construction, analysis and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({i}, {j}) for K_{n}")]
    InvalidEdge { i: usize, j: usize, n: usize },
    #[error("vertex {v} out of range for K_{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("K_{n} exceeds the bit-row ceiling of {max} vertices")]
    Capacity { n: usize, max: usize },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported color count {0}; expected 2 or 3")]
    ColorCount(usize),
    #[error("{0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("recoloring edge {edge} to its current color is a no-op")]
    NoOpMove { edge: usize },
    #[error("{states} states exceed the exhaustive budget of {budget}")]
    OverBudget { states: u128, budget: u128 },
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
