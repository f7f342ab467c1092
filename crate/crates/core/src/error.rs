use thiserror::Error;

/// Errors raised by construction, arithmetic, and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("invalid interval: lower endpoint {lo} exceeds upper endpoint {hi}")]
    InvalidInterval { lo: String, hi: String },
    #[error("invalid gap: ({lo}, {hi}) must have lo < hi")]
    InvalidGap { lo: String, hi: String },
    #[error("set is not contained in hull [{lo}, {hi}]")]
    NotContained { lo: String, hi: String },
    #[error("invalid family spec: {0}")]
    Spec(String),
    #[error("invalid address: {0}")]
    Address(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("invalid weights: {0}")]
    Weights(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("undefined: {0}")]
    Undefined(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
