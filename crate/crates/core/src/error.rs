use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid generator symbol: {0}")]
    InvalidSymbol(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("symbol {0} is not covered by the map")]
    MissingSymbol(String),

    #[error("invalid catalog key: {0}")]
    InvalidKey(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("unknown relator label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate relator label {0:?}")]
    DuplicateLabel(String),

    #[error("presentation invariant violated: {0}")]
    Invalid(String),

    #[error("tietze move rejected: {0}")]
    Tietze(String),

    #[error("certificate fails at step {step}: {reason}")]
    Certificate { step: usize, reason: String },

    #[error("relator {0} does not lie in the subgroup")]
    NotInSubgroup(String),

    #[error("coset structure: {0}")]
    Coset(String),

    #[error("json error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
