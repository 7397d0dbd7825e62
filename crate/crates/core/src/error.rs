use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("factorization of {value} exceeds the factoring budget")]
    FactorizationIncomplete { value: BigInt },
    #[error("divisor is the zero polynomial")]
    DivisorZero,
    #[error("divisor is a constant; pseudo-division needs degree at least 1")]
    DivisorConstant,
    #[error("the zero polynomial has no content")]
    ZeroPolynomial,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("{0} is a perfect square")]
    DIsSquare(BigInt),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),
    #[error("{0} is not an element of the ring")]
    NotInRing(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
