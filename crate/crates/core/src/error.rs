use thiserror::Error;

use crate::exactfield::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape error at {path}: {message}")]
    Shape { path: String, message: String },
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("antipode required: {0}")]
    AntipodeRequired(&'static str),
    #[error("invertible antipode required: {0}")]
    AntipodeInverseRequired(&'static str),
    #[error("degree {degree} has dimension {dim}, above the size cap {cap}")]
    SizeLimit { degree: usize, dim: usize, cap: usize },
    #[error("stability violated in degree {degree}: {what}")]
    StabilityViolation { degree: usize, what: String },
    #[error("validation failed: {0}")]
    ValidationFailure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl Error {
    pub fn shape(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Shape { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
