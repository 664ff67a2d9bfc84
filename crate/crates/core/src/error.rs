use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient of t^{index} requested from a series truncated at order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("exp needs a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("log needs a series with constant term one")]
    ConstantTermNotOne,
    #[error("constant term is not invertible in the coefficient ring")]
    NotInvertible,
    #[error("inner series of a composition must have order at least one")]
    NotDelta,
    #[error("series is not divisible by t^{0}")]
    NotDivisible(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("not an exact rational: {0:?}")]
    Rational(String),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Polynomial { input: String, reason: String },
    #[error("unknown sequence family {0:?}")]
    Family(String),
    #[error("unknown identity {0:?}")]
    Identity(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("family {0} needs an order alpha")]
    MissingAlpha(&'static str),
    #[error("family {0} takes no order alpha")]
    UnexpectedAlpha(&'static str),
    #[error("family {0} needs a block count k")]
    MissingK(&'static str),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmbralError {
    #[error("polynomial of degree {degree} needs truncation order at least {degree}, got {order}")]
    TruncationTooSmall { degree: usize, order: usize },
    #[error("operator series coefficients must not involve x")]
    NotXFree,
    #[error("order mu must be >= {min}, got {mu}")]
    OrderOutOfRange { mu: i64, min: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}
