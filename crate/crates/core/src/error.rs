use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("not graded: {0}")]
    NotGraded(String),
    #[error("not a distributive lattice: {0}")]
    NotDistributive(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
