use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank parameter n must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("highest weight needs {expected} coefficients, got {got}")]
    WeightLength { expected: usize, got: usize },
    #[error("highest weight coefficient a{index} is negative ({value})")]
    NegativeCoefficient { index: usize, value: i64 },
    #[error("highest weight must be non-zero")]
    ZeroWeight,
    #[error("residue {index} out of range 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("content {0:?} has a negative entry")]
    NegativeContent(Vec<i64>),
    #[error("content has {got} entries, expected {expected}")]
    ContentLength { expected: usize, got: usize },
    #[error("reflection s{residue} sends content {from:?} outside the positive cone")]
    LeavesCone { residue: usize, from: Vec<i64> },
    #[error("{0:?} is not a vertex of the generated crystal")]
    NotAVertex(Vec<i64>),
    #[error("{residue}-string through {content:?} leaves the degree horizon {max_degree}")]
    Truncated {
        content: Vec<i64>,
        residue: usize,
        max_degree: usize,
    },
    #[error("invalid multipartition: {0}")]
    InvalidMultipartition(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
