use thiserror::Error;

/// Errors raised by the exact-arithmetic, combinatorial and module layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("invalid window {window:?}: {reason}")]
    InvalidWindow { window: Vec<i32>, reason: String },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("subset {subset} is not contained in {range}")]
    SubsetOutOfRange { subset: String, range: String },
    #[error("invalid peak set {peaks} for n={n}: {reason}")]
    InvalidPeakSet {
        peaks: String,
        n: usize,
        reason: String,
    },
    #[error("degree or basis mismatch: {0}")]
    DegreeMismatch(String),
    #[error("partition {0:?} has odd size")]
    OddSize(Vec<usize>),
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("2-quotient of {0:?} violates the shifted condition")]
    InvalidQuotient(Vec<usize>),
    #[error("support digraph has a cycle through basis element {0}")]
    CyclicSupport(String),
    #[error("diagonal entry of generator {generator} at {label} is not 0 or -1")]
    BadDiagonal { generator: usize, label: String },
    #[error("prefix span not invariant at generator {generator}, basis element {label}")]
    NotTriangular { generator: usize, label: String },
    #[error("intertwiner hypothesis violated: {0}")]
    IntertwinerHypothesis(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("words share letters: {0:?}")]
    LetterOverlap(Vec<i32>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
