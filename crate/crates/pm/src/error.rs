use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PmError {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("game has no actions or no outcomes")]
    Empty,

    #[error("{0} outcomes exceeds the supported maximum of {max}", max = crate::MAX_OUTCOMES)]
    TooManyOutcomes(usize),

    #[error("action index {0} out of range")]
    ActionOutOfRange(usize),

    #[error("game document: {0}")]
    Json(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<serde_json::Error> for PmError {
    fn from(e: serde_json::Error) -> Self {
        PmError::Json(e.to_string())
    }
}

impl From<std::io::Error> for PmError {
    fn from(e: std::io::Error) -> Self {
        PmError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, PmError>;
