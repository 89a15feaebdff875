use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("value {0} already occurs in the tableau")]
    DuplicateEntry(u32),
    #[error("value {0} does not occur in the tableau")]
    MissingEntry(u32),
    #[error("({row}, {col}) is not a removable corner")]
    NotCorner { row: usize, col: usize },
    #[error("tableau is not standard")]
    NotStandard,
    #[error("insertion of ({a}, {b}) does not give a partially standard tableau")]
    NotPartiallyStandard { a: u32, b: u32 },
    #[error("restriction is not a tableau of partition shape")]
    BadRestriction,
    #[error("integer overflow in Laurent coefficient arithmetic")]
    Overflow,
    #[error("variant mismatch: expected {expected}, found {found}")]
    VariantMismatch { expected: String, found: String },
    #[error("vertex is not in the module: {0}")]
    UnknownVertex(String),
    #[error("canonical basis verification failed: {0}")]
    Verification(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
