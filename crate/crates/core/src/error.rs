use crate::landscape::Violation;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("birth {birth} is not below death {death}")]
    NotAboveDiagonal { birth: Scalar, death: Scalar },
    #[error("rank query ({b}, {d}) has b > d")]
    InvalidQuery { b: Scalar, d: Scalar },
    #[error("negative parameter {0}")]
    Negative(Scalar),
    #[error("parameter must be positive, got {0}")]
    NotPositive(Scalar),
    #[error("interpolation parameter {0} is outside [0, 1]")]
    OutOfUnitInterval(Scalar),
    #[error("diagram is empty")]
    EmptyDiagram,
    #[error("diagram is not birth-zero: pair ({birth}, {death})")]
    NotBirthZero { birth: Scalar, death: Scalar },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid landscape curve: {0}")]
    InvalidCurve(String),
    #[error("invalid landscape sequence: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidLandscape(Vec<Violation>),
    #[error("death vector is not a non-increasing sequence of positive values")]
    InvalidDeathVector,
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
