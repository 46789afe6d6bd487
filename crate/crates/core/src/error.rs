use thiserror::Error;

use crate::schlafli::Reason;

/// Errors produced by the covering computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Coxeter symbol: {0}")]
    InvalidSymbol(String),

    #[error("singular Gram matrix (|det| = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("numeric domain error: {0}")]
    Domain(String),

    #[error("orthoscheme is not compact: discriminant {0:e} < 0")]
    NotCompact(f64),

    #[error("base polygon is not hyperbolic: angle defect {0:e} <= 0")]
    NonHyperbolic(f64),

    #[error("unsupported symbol {0} for this volume formula")]
    UnsupportedSymbol(String),

    #[error("quadrature did not reach tolerance {tol:e} (last error estimate {estimate:e})")]
    QuadratureFailure { tol: f64, estimate: f64 },

    #[error("non-finite input {0}")]
    NonFinite(f64),

    #[error("dimension {0} is not one of 3, 4, 5")]
    BadDimension(usize),

    #[error("{symbol} is not a valid prism tiling: {reason}")]
    InvalidTiling { symbol: String, reason: Reason },

    #[error("unknown table {0} (expected 1..=7)")]
    UnknownTable(u32),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
