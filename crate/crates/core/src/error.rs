use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("evaluation does not produce an integer")]
    NonIntegralEvaluation,
    #[error("invalid polynomial JSON: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("expected a positive integer, got {0}")]
    NonPositive(u32),
    #[error("expected an odd integer, got {0}")]
    Even(u32),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("the two primes must be distinct (got {0} twice)")]
    EqualPrimes(u32),
    #[error("index {0} is too large")]
    TooLarge(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseError {
    #[error("a staircase needs at least one generator")]
    Empty,
    #[error("generator ({0}, {1}) appears more than once")]
    Duplicate(u32, u32),
    #[error("generator ({0}, {1}) has no mirror ({1}, {0})")]
    Asymmetric(u32, u32),
    #[error("not a staircase: ({0}, {1}) followed by ({2}, {3}) does not strictly descend in beta")]
    NotMonotone(u32, u32, u32, u32),
    #[error("consecutive torus staircases are validated for odd n >= 15 only, got {0}")]
    UnvalidatedTorusParameter(u32),
    #[error("bifiltration level overflow in tensor product")]
    Overflow,
    #[error("invalid staircase file: {0}")]
    Parse(String),
    #[error("cannot read staircase file {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DinvError {
    #[error("delta is undefined on an empty generator set")]
    EmptyGeneratorSet,
    #[error("surgery coefficient must be odd and positive, got {0}")]
    BadModulus(u64),
    #[error("label {m} lies outside |m| <= {bound} for N = {n}")]
    LabelOutOfRange { m: i64, n: u64, bound: u64 },
    #[error("d({m}) = {value} is not an integer; the complex does not match N")]
    NonIntegral { m: i64, value: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("the two primes must be distinct (got {0} twice)")]
    EqualPrimes(u32),
    #[error("table has N = {actual}, expected p^2 q^2 = {expected}")]
    ModulusMismatch { expected: u64, actual: u64 },
    #[error("N = {0} is not a perfect square")]
    NotSquare(u64),
    #[error(transparent)]
    Dinv(#[from] DinvError),
}

/// Crate-level error, used where several modules are chained together.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
    #[error(transparent)]
    Dinv(#[from] DinvError),
    #[error(transparent)]
    Obstruct(#[from] ObstructError),
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Integrality failures mean the inputs were accepted but the pipeline
    /// produced inconsistent data; everything else is a rejected precondition.
    pub fn is_internal_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::Dinv(DinvError::NonIntegral { .. })
                | Error::Obstruct(ObstructError::Dinv(DinvError::NonIntegral { .. }))
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
