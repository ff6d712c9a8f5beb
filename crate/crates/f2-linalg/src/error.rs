use crate::BitVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector {offending} is not in the enclosing span")]
    NotSubspace { offending: BitVec },
    #[error("cannot parse bit string: {0}")]
    Parse(String),
}
