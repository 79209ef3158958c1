use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A sieve- or capacity-bounded operation was asked to go past its
    /// configured limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A desk-scale enumeration was asked for more than its compute budget
    /// allows.
    #[error("compute budget exceeded: {0}")]
    Budget(String),

    /// Invalid argument to an operation.
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// Factorization input outside the supported range.
    #[error("factorization supports positive integers below 2^64, got {0}")]
    FactorRange(String),

    /// An exact linear system had no unique solution.
    #[error("linear system is singular")]
    Singular,

    /// A result that must be an integer came out fractional.
    #[error("expected integral result: {0}")]
    NonIntegral(String),

    /// Malformed database input.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Two database entries share an id.
    #[error("duplicate sequence id {0}")]
    DuplicateId(String),

    /// Lookup of an id that is not in the database.
    #[error("unknown sequence {0}")]
    UnknownId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
