use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain size mismatch: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },

    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),

    #[error("not a permutation: {0:?}")]
    NotBijective(Vec<u32>),

    #[error("lcm(1..{k}) does not fit in 64 bits (supported k <= {max})")]
    LcmOverflow { k: u64, max: u64 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("word of length {length} exceeds the expansion cap of {cap} letters")]
    WordTooLong { length: u128, cap: u64 },

    #[error("unsupported level: {0}")]
    Capability(String),

    #[error("words are equal and cannot be separated")]
    Inseparable,

    #[error("pair is not an identity at level {k}")]
    NotAnIdentity { k: usize },

    #[error("search refused: estimated {estimate} evaluations exceeds the budget of {budget}")]
    Infeasible { estimate: u128, budget: u128 },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
