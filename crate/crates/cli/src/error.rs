use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("parse error: {0}")]
    Invalid(String),
    #[error("shape error at {path}: {message}")]
    Shape { path: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] hhcalc_core::Error),
}

impl CliError {
    /// 2 for malformed input, 1 for everything the mathematics rejects.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Invalid(_) | CliError::Shape { .. } | CliError::Io { .. } => 2,
            CliError::Core(hhcalc_core::Error::Shape { .. } | hhcalc_core::Error::Field(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}
