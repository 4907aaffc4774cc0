use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The generators share a common factor, so their complement in ℕ is infinite.
    #[error("not a numerical semigroup: generators have gcd {gcd}")]
    NotANumericalSemigroup { gcd: BigUint },

    /// `n` is prime, so the scaled family collapses to ℕ.
    #[error("S(B_{n}) is degenerate (n is prime, the semigroup is all of ℕ)")]
    DegenerateSemigroup { n: u64 },

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded { what: &'static str, value: String, bound: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A result contradicts a proven identity; this signals an arithmetic bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn bound(what: &'static str, value: impl ToString, bound: impl ToString) -> Self {
        Error::BoundExceeded { what, value: value.to_string(), bound: bound.to_string() }
    }
}
