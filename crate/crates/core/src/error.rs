use thiserror::Error;

/// Errors raised by construction, parsing and the relation operations.
///
/// Negative mathematical verdicts (an unsolvable equation, a relation that
/// is not functional) are ordinary return values, not errors. The one
/// exception is [`Error::NotInvertible`], which `solve_via_inverse` reports
/// when its precondition fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NonSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("non-binary entry `{entry}` in row {row}")]
    NonBinaryEntry { row: usize, entry: String },
    #[error("index {index} out of range for index set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relations are over different index sets")]
    IndexSetMismatch,
    #[error("cartesian product needs at least one factor")]
    EmptyFactorList,
    #[error("relation is not invertible")]
    NotInvertible,
    #[error("index set of size {size} exceeds the brute-force cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
