use thiserror::Error;

/// Errors produced by the cube engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected {expected} cells, found {found}")]
    BadLength { expected: usize, found: usize },

    #[error("invalid cell character {ch:?} at position {position}")]
    BadChar { ch: char, position: usize },

    #[error("cycle length {0} must be even and at least 4")]
    BadCycleLength(usize),

    #[error("star vector has no stars")]
    NoStars,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {n} exceeds the limit of {limit}")]
    DimensionTooLarge { n: usize, limit: usize },

    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),

    #[error("parameter out of range: {0}")]
    BadRange(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate edge {edge}")]
    DuplicateEdge { line: usize, edge: String },

    #[error("z-table has no entry for z({k},{l})")]
    MissingZEntry { k: usize, l: usize },

    #[error("non-integral result: {0}")]
    NonIntegralResult(String),

    #[error("edges of mixed dimensions ({first} and {other})")]
    MixedDimensions { first: usize, other: usize },

    #[error("a {len}-cycle does not fit in Q_{m}")]
    CycleDoesNotFit { len: usize, m: usize },

    #[error("unknown theorem identifier {0:?}")]
    BadTheoremId(String),

    #[error("missing parameter {0}")]
    MissingParam(&'static str),

    #[error("bad pattern {0:?} (expected e, q<k> or c<m> with m even and at least 4)")]
    BadPattern(String),

    /// The search stopped early; the optimum lies in `lower..=upper`.
    #[error("budget exceeded after {nodes} nodes: optimum in [{lower}, {upper}]")]
    BudgetExceeded { lower: u64, upper: u64, nodes: u64 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
