use thiserror::Error;

/// Errors raised by diagram construction, basis conversions and the structure maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {0} appears in more than one block")]
    OverlappingBlocks(i64),
    #[error("node {0} is not covered by any block")]
    MissingNode(i64),
    #[error("column {column} is out of range for a diagram of order {order}")]
    ColumnOutOfRange { column: i64, order: usize },
    #[error("blocks must be non-empty")]
    EmptyBlock,
    #[error("position {0} is not a bullet cut")]
    InvalidCut(usize),
    #[error("invalid atom decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("metadata mismatch: {0}")]
    MetadataMismatch(String),
    #[error("basis {basis} is not defined for space {space}")]
    IllegalBasis { space: String, basis: String },
    #[error("a q parameter is required for basis {0}")]
    MissingQ(String),
    #[error("q = -1 is not allowed (q + 1 must be invertible)")]
    SingularQ,
    #[error("{0} does not refine {1}")]
    NotRefining(String, String),
    #[error("weight function vanishes on the irreducible diagram {0}")]
    SingularWeight(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("antipode series did not terminate within {0} iterations")]
    NonTerminating(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
