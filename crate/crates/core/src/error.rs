use thiserror::Error;

use crate::lp::LpError;

/// Errors raised by parsing, construction and the exact solvers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("missing subset {{{0}}}")]
    MissingSubset(String),
    #[error("value of subset {{{0}}} must be zero (|A| <= 1)")]
    NonzeroSmallSet(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("cut side must be a proper nonempty subset")]
    TrivialCut,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("precondition violated at subset {{{subset}}}: {reason}")]
    Precondition { subset: String, reason: String },
    #[error("negative weight on cut {0}")]
    NegativeWeight(String),
    #[error("exponent must be positive")]
    NonPositiveExponent,
    #[error("not of negative type: witness {{{witness}}}, form value {form_value}")]
    NotNegativeType { witness: String, form_value: String },
    #[error("distance matrix is not of negative type (eigenvalue {0:e})")]
    NotNegativeTypeMetric(f64),
    #[error("no support cut has positive denominator mass")]
    ZeroDenominator,
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
