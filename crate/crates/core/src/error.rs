use thiserror::Error;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Objects over different ambient rings were combined.
    #[error("ambient mismatch: {0}")]
    Structural(String),

    /// An invariant was requested that does not exist for the input
    /// (e.g. the initial degree of the zero ideal).
    #[error("undefined invariant: {0}")]
    UndefinedInvariant(String),

    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is valid but not handled by this implementation.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A configured size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    /// Malformed text input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
