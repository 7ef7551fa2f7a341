use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("not a permutation: {0}")]
    NotBijection(String),
    #[error("invalid block sequence: {0}")]
    InvalidBlocks(String),
    #[error("not a parking function: {0}")]
    NotParking(String),
    #[error("invalid input: {0}")]
    Domain(String),
    #[error("power series has zero constant term")]
    ZeroConstantTerm,
    #[error("fixed point requires a nonzero constant term in phi")]
    DegenerateFixedPoint,
    #[error("enumeration needs {required} paths, above the cap of {cap}")]
    BudgetExceeded { required: String, cap: u64 },
    #[error("size {n} is above the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
