use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("syntax error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { pos: usize, name: char },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("operands live over different prime fields")]
    FieldMismatch,
    #[error("not a curve: Hilbert polynomial {polynomial} does not have degree 1")]
    NotACurve { polynomial: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("curve is not subcanonical")]
    NotSubcanonical,
    #[error("generic choice failed after {attempts} draws: {reason}")]
    Genericity { attempts: usize, reason: String },
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
