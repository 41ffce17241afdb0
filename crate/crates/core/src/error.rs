use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("ball of radius {radius} has more than {cap} elements")]
    BallCapExceeded { radius: usize, cap: usize },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cochain has no value on cell {0}")]
    OutsideDomain(String),

    #[error("value {0} lies outside the truncation radius {1}")]
    RadiusInsufficient(String, usize),

    #[error("no lift for {0}")]
    Unliftable(String),

    #[error("integer system has no solution at radius {0}")]
    Unsat(usize),

    #[error("generic point lies on a face hyperplane of {0}")]
    GenericityViolation(String),

    #[error("map is not affine on the cell: {0}")]
    FamilyMisuse(String),

    #[error("out of scope: {0}")]
    Scope(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
