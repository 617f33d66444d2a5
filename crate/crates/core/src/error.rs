use thiserror::Error;

/// Errors raised by library operations.
///
/// Check failures (an invalid factorization, an incompatible representation)
/// are reported through [`crate::report::ValidationReport`] instead; these
/// variants cover malformed input and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },

    #[error("word length {len} exceeds the limit of {limit} letters")]
    WordTooLong { len: usize, limit: usize },

    #[error("full twist needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("degree {0} is not allowed")]
    BadDegree(i32),

    #[error("position {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("braid is not liftable: {0}")]
    NotLiftable(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid budget: {0}")]
    Budget(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
