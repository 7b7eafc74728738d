use thiserror::Error;

/// Errors raised by the library.
///
/// `Precondition` is reserved for violated theorem hypotheses; everything else
/// is an argument or range problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch { left: String, left_size: usize, right: String, right_size: usize },

    #[error("exponent {exponent} outside the valid range [{low}, {high}]")]
    OutOfRange { exponent: i64, low: i64, high: i64 },

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(i64, i64),

    #[error("{theorem} requires {hypothesis}")]
    Precondition { theorem: &'static str, hypothesis: String },

    #[error("polynomial division is not exact: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn precondition(theorem: &'static str, hypothesis: impl Into<String>) -> Self {
        Error::Precondition { theorem, hypothesis: hypothesis.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
