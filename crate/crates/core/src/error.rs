use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("ring must have between 1 and {max} variables, got {got}")]
    BadVarCount { got: usize, max: usize },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("operation undefined on the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("expected a linear form")]
    NotLinear,
    #[error("expected a monomial ideal")]
    NotMonomial,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Betti table incomplete: Euler characteristic mismatch in degree {degree} (table {table}, Hilbert numerator {hilbert})")]
    IncompleteTable { degree: u32, table: i64, hilbert: i64 },
    #[error("retry budget exhausted: {0}")]
    RetryBudget(String),
    #[error("degenerate ideal: {0}")]
    Degenerate(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("inhomogeneous generator at line {line}")]
    ParseInhomogeneous { line: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
