use thiserror::Error;

/// Errors raised by the algebra, code construction and ensemble routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field elements from different fields (mod {0} vs mod {1})")]
    FieldMismatch(u32, u32),

    #[error("ring elements from different rings (length {0} vs {1})")]
    RingMismatch(usize, usize),

    #[error("m = {m} is not coprime to q = {q}")]
    NotCoprime { m: usize, q: u32 },

    #[error("m must be at least 1")]
    ZeroLength,

    #[error("(X^m - 1)/(X - 1) has no irreducible factor for m = {0}")]
    NoNonzeroCoset(usize),

    #[error("polynomial does not divide X^{0} - 1")]
    NotADivisor(usize),

    #[error("expected {expected} symbols, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("enumerating {q}^{exponent} elements exceeds the limit of {limit}")]
    EnumerationTooLarge { q: u32, exponent: usize, limit: u64 },

    #[error("the zero code has no minimum distance")]
    ZeroCode,

    #[error("at least one trial is required")]
    EmptyTrialSet,

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("cannot parse {0:?} as a coefficient list")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
