use thiserror::Error;

use crate::scalar::FieldKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid scalar literal `{0}`")]
    BadLiteral(String),
    #[error("wrong scalar field: expected {expected}")]
    WrongField { expected: FieldKind },
    #[error("malformed CR pair: {0}")]
    MalformedPair(String),
    #[error("dim R - dim h = {0} is odd")]
    OddRank(usize),
    #[error("codirection is zero")]
    ZeroCodirection,
    #[error("invalid orbit model: {0}")]
    InvalidModel(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    #[error("singular matrix")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
