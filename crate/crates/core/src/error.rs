use thiserror::Error;

/// Errors raised by the library. Every variant corresponds to a violated
/// precondition; nothing here signals an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero input is not allowed here")]
    ZeroInput,
    #[error("degree {found} is too small (need at least {min})")]
    DegreeTooSmall { found: usize, min: usize },
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("polynomial has multiple roots")]
    MultipleRoots,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power (q = p^r with r >= 1)")]
    NotPrimePower(u64),
    #[error("n = {n} and q = {q} are not coprime")]
    NotCoprime { n: u64, q: u64 },
    #[error("n = {0} is out of range (need n >= 3)")]
    DegreeOutOfRange(u64),
    #[error("index {i} is out of range 1..={max}")]
    IndexOutOfRange { i: u64, max: u64 },
    #[error("both inputs are zero")]
    BothZero,
    #[error("prime {p} divides n = {n}; the heart is not a direct summand")]
    PrimeDividesDegree { p: u64, n: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation group needs degree at least 2")]
    GroupDegreeTooSmall,
    #[error("singular cubic (4p^3 + 27q^2 = 0)")]
    SingularCurve,
    #[error("outside supported family: {0}")]
    OutsideSupportedFamily(String),
    #[error("outside theorem hypotheses: {0}")]
    OutsideHypotheses(String),
    #[error("unsupported relation between dim X = {dim_x} and [E:Q] = {deg_e}")]
    UnsupportedRelation { dim_x: u64, deg_e: u64 },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
