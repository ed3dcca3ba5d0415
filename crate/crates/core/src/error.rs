use thiserror::Error;

/// Errors raised by every layer of the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring context mismatch")]
    Context,
    #[error("duplicate variable name `{0}`")]
    DuplicateVar(String),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("negative exponent {exp} on non-Laurent variable `{var}`")]
    Exponent { var: String, exp: i64 },
    #[error("cannot substitute a non-unit into the Laurent variable `{0}`")]
    Substitution(String),
    #[error("series is not invertible: constant coefficient is not 1")]
    Invertibility,
    #[error("polynomial is not symmetric: swapping variables {0} and {1} changes it")]
    Symmetry(String, String),
    #[error("element is not homogeneous")]
    Grading,
    #[error("truncation order {order} exceeded (coefficient {needed} requested)")]
    Order { order: usize, needed: usize },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("symmetry type mismatch: {0}")]
    Type(String),
    #[error("witness matrix is singular")]
    Witness,
    #[error("form is degenerate")]
    Degenerate,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
