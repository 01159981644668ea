use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("{0} is not in the image of the exponential")]
    NotInImage(String),
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: i64, right: i64 },
    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: String, right: String },
    #[error("invalid base: {0}")]
    InvalidBase(String),
    #[error("path mismatch: {0}")]
    LevelPathMismatch(String),
    #[error("malformed hereditary term: {0}")]
    MalformedTerm(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("type error at offset {offset}: {message}")]
    Type { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn budget(what: impl Into<String>) -> Self {
        Error::BudgetExceeded(what.into())
    }

    pub(crate) fn level(left: impl TryInto<i64>, right: impl TryInto<i64>) -> Self {
        Error::LevelMismatch {
            left: left.try_into().unwrap_or(i64::MAX),
            right: right.try_into().unwrap_or(i64::MAX),
        }
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Type { .. } => 1,
            Error::BudgetExceeded(_) => 3,
            _ => 2,
        }
    }
}
