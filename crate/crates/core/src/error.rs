use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero element is not allowed here")]
    ZeroElement,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{value} is not an element of GF({q})")]
    InvalidCoefficient { value: u64, q: u32 },
    #[error("discrete log bound exceeded: group order {order} > bound {bound}")]
    DlogBoundExceeded { order: u64, bound: u64 },
    #[error("element is not a power of the given base")]
    NotInGroup,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("{0} is not a normal element")]
    NotNormal(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial does not divide x^{n} - 1")]
    NotDivisor { n: usize },
    #[error("enumeration needs {needed} words, cap is {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("code has no nonzero codewords")]
    ZeroCode,
    #[error("a parity-check polynomial of degree n (the full code) has no nonzero check element")]
    FullCodeUnsupported,
    #[error("word set is not a cyclic code")]
    NotCyclic,
    #[error("ragged word lengths")]
    RaggedWords,
    #[error("parse error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            msg: msg.into(),
        }
    }
}
