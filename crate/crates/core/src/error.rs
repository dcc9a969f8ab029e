use thiserror::Error;

/// Parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("undefined quantum integer index {0}")]
    UndefinedQuantumIndex(i64),
    #[error("pole at q = {point}: denominator {denominator} vanishes")]
    Pole { point: String, denominator: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("no splitting element exists for these parameters")]
    NoSplittingElement,
    #[error("module is not completely reducible (defect dimension {defect})")]
    NotCompletelyReducible { defect: usize },
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("result depends on vectors beyond the truncation cutoff {cutoff}")]
    Inconclusive { cutoff: usize },
    #[error("malformed module data: {0}")]
    Malformed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
