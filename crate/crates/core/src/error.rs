use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan data a={a}, b={b}: need a >= 2, b >= 2 and ab > 4")]
    InvalidCartan { a: i64, b: i64 },

    #[error("the zero weight has no interesting orbit")]
    ZeroWeight,

    #[error("the orbit of {0} meets the dominant or antidominant chamber")]
    NotStarOrbit(String),

    #[error("LS paths are built on orbits with positive p-sequence; use the negated shape")]
    NegativeOrbit,

    #[error("orbit indices out of order: expected {m} >= {n}")]
    BadOrder { m: i64, n: i64 },

    #[error("directions are not strictly decreasing")]
    NotDecreasing,

    #[error("bad sigma sequence: {0}")]
    BadSigmas(String),

    #[error("no sigma-chain at junction {0}")]
    ChainViolation(usize),

    #[error("parameter t = {0} lies outside [0, 1]")]
    OutOfRange(String),

    #[error("internal: path endpoint is not an integral weight")]
    InternalNonIntegral,

    #[error("factors do not share a common shape")]
    ShapeMismatch,

    #[error("shape is not divisible by {0}")]
    NotDivisible(u64),

    #[error("q-sequence form violated: {0}")]
    FormViolation(String),

    #[error("operation not applicable to this shape: {0}")]
    NotApplicableForm(String),

    #[error("internal: step cap of {0} reached without termination")]
    NonTermination(usize),

    #[error("shape is not twice a coprime weight")]
    NotD2Shape,

    #[error("internal: more than one index gap >= 2 in a path")]
    MultipleGaps,

    #[error("internal: scan bound exceeded: {0}")]
    InternalBound(String),

    #[error("internal invariant breached: {0}")]
    InternalInvariant(String),

    #[error("integer bit-length limit of {0} bits exceeded")]
    BitLimit(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
