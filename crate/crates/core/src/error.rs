use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u32, right: u32 },

    #[error("operation {op} is not defined at p = {p}")]
    OperationPrime { op: String, p: u32 },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("classification error: {0}")]
    Classification(String),

    #[error("parity error: {0}")]
    Parity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration is unbounded: {0}")]
    Unbounded(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
