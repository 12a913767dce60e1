use thiserror::Error;

use crate::diagram::Inadmissible;
use crate::tangle::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("width mismatch: upper tangle has {bottom} south nodes, lower has {top} north nodes")]
    WidthMismatch { bottom: usize, top: usize },

    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid tangle: {0:?}")]
    InvalidTangle(Vec<Violation>),

    #[error("decoration on an arc hidden from the west wall after composition")]
    ExposureViolation,

    #[error("reduction produced an inadmissible diagram: {0}")]
    ClosureViolation(Inadmissible),

    #[error("not an admissible diagram: {0}")]
    NotAdmissible(Inadmissible),

    #[error("{0}")]
    Domain(String),

    #[error("resource cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("coefficients r_a(S', S) depend on T: {0}")]
    IndependenceViolation(String),

    #[error("factorization guard failed: {0}")]
    Factorization(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
