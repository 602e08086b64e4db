use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} divides the leading coefficient")]
    PrimeDividesLeading(u64),
    #[error("{0} cannot be factored within the trial-division bound")]
    FactorBound(BigInt),
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("irreducibility could not be established")]
    IrreducibilityUnknown,
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("prime bound {0} is below 20")]
    PrimeBoundTooSmall(u64),
    #[error("only {0} usable primes, at least 20 required")]
    TooFewPrimes(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    ContextMismatch,
    #[error("orbit is undefined for 0 and 1")]
    DegenerateOrbit,
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
    #[error("family `{family}` takes {expected} parameter(s), got {got}")]
    Arity {
        family: String,
        expected: String,
        got: usize,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("iteration bound {0} exceeded")]
    IterationBound(u64),
    #[error("interpolation inconsistent: {0}")]
    Interpolation(String),
    #[error("candidate factors do not multiply to the reduced discriminant")]
    CandidateMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
