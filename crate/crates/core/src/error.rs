use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor is not monic in X")]
    NotMonic,
    #[error("polynomial is constant in {0}")]
    ConstantInput(String),
    #[error("degree {0} outside the supported range 1..=4")]
    DegreeOutOfRange(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("division is not exact")]
    InexactDivision,
    #[error("pole: {0}")]
    Pole(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("f shares the factor {0} with X^4 - 1")]
    SharesRootOfUnity(String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("curve model is not integral")]
    NonIntegralModel,
    #[error("checksum mismatch in {0}")]
    Checksum(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
