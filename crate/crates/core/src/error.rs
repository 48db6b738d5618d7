use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("generator not admissible on {domain}: {reason}")]
    GeneratorDomain { domain: String, reason: String },
    #[error("cannot compose: target {left} does not match source {right}")]
    Composition { left: String, right: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("chain condition fails at step {step}: {message}")]
    Chain { step: usize, message: String },
    #[error("basis error: {0}")]
    Basis(String),
    #[error("pairing error: {0}")]
    Pairing(String),
    #[error("realization error: {0}")]
    Realization(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
