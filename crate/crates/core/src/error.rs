use alloc::string::String;

/// Errors produced by the geometry and coding routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{h} exceeds the supported bound 2^20")]
    FieldTooLarge { p: u32, h: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element {value} does not belong to a field of order {q}")]
    ForeignElement { value: u32, q: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot span an empty generator list")]
    EmptySpan,
    #[error("the zero vector does not define a projective point")]
    ZeroVector,
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("field of order {0} has odd characteristic; hyperovals need q even")]
    OddOrder(u32),
    #[error("field of order {0} is not a square; Hermitian varieties need F_(q^2)")]
    NotSquareOrder(u32),
    #[error("point set is not an arc: points {0}, {1}, {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("wrong cardinality: expected {expected}, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("point {0} of the set has no tangent")]
    NoTangent(usize),
    #[error("invalid egg: {0}")]
    InvalidEgg(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("operation needs a structure built from an egg")]
    NotTranslationGq,
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("vector length {found} does not match code length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("candidate count {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("position {0} is out of range")]
    PositionOutOfRange(usize),
    #[error("position {0} is not covered by any codeword of weight <= {1}")]
    Unrepairable(usize, usize),
}

pub type Result<T> = core::result::Result<T, Error>;
