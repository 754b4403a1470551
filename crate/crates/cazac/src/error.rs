//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A documented precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Two operands require equal moduli.
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    /// A polynomial is not a bijection; carries a collision witness.
    #[error("not a bijection: f({x1}) = f({x2}) = {value}")]
    NotBijective { x1: u64, x2: u64, value: u64 },
    /// Exact polynomial division left a nonzero remainder.
    #[error("exact division left a nonzero remainder (degree {0})")]
    InexactDivision(usize),
    /// An exactness assertion on integer parity failed.
    #[error("parity assertion failed: {0}")]
    Parity(String),
}
