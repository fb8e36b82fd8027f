use thiserror::Error;

/// Errors raised by basis evaluation, quadrature and projection.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid basis index: {0}")]
    InvalidIndex(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("basis function {0} has zero norm and cannot be normalized")]
    ZeroNorm(String),
    #[error("invalid quadrature rule: {0}")]
    InvalidRule(String),
    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::legendre::MAX_DEGREE)]
    DegreeTooLarge(i32),
}

pub type Result<T> = std::result::Result<T, Error>;
