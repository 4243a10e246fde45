use thiserror::Error;

/// Errors produced by code construction, parsing and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyPauli,

    #[error("invalid Pauli character {found:?} at position {position}")]
    InvalidPauliChar { position: usize, found: char },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("generators {first} and {second} anticommute")]
    NonCommuting { first: usize, second: usize },

    #[error("generator {index} is dependent on the preceding generators")]
    DependentGenerators { index: usize },

    #[error("malformed logical operators: {0}")]
    MalformedLogicals(String),

    #[error("code encodes no logical qubits; distance is undefined")]
    NoLogicalQubits,

    #[error("code has no logical operators")]
    MissingLogicals,

    #[error("search space too large: {0}")]
    SearchTooLarge(String),

    #[error("block structure mismatch: {0}")]
    BlockMismatch(String),

    #[error("unknown built-in code {0:?}")]
    UnknownBuiltin(String),

    #[error("qudit dimension mismatch: r={r} requires q={expected}, found q={found}")]
    QuditDimensionMismatch { r: usize, expected: u64, found: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
