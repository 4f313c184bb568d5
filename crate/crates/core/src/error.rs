use thiserror::Error;

/// Everything that can go wrong in the trade model, the protocol engine,
/// the learners and the adversary generators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("valuation ({s}, {b}) outside [0,1]^2")]
    InvalidValuation { s: f64, b: f64 },

    #[error("price pair ({p}, {q}) violates 0 <= p <= q <= 1")]
    InvalidPricePair { p: f64, q: f64 },

    #[error("invalid price grid: {0}")]
    InvalidGrid(String),

    #[error("empty valuation sequence")]
    EmptySequence,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("alpha must be >= 1, got {0}")]
    InvalidAlpha(f64),

    #[error("horizon must be positive")]
    ZeroHorizon,

    #[error("protocol violation at round {round}: {reason}")]
    ProtocolViolation { round: usize, reason: String },

    #[error("learner configuration: {0}")]
    LearnerConfig(String),

    #[error("adversary configuration: {0}")]
    AdversaryConfig(String),

    #[error("no seeds supplied")]
    NoSeeds,

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
