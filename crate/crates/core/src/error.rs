use thiserror::Error;

/// Everything that can go wrong between ingesting a series and emitting a report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular matrix: no usable pivot in column {column}")]
    SingularMatrix { column: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("sign violation at n={n}: value {value} contradicts the declared convention")]
    SignViolation { n: usize, value: String },

    #[error("zero coefficient at n={n}")]
    ZeroCoefficient { n: usize },

    #[error("series has no entry for n={n}")]
    MissingIndex { n: usize },

    #[error("alpha table has no entry for alpha_{i}({n})")]
    MissingAlpha { n: usize, i: usize },

    #[error("need at least {needed} ratio coefficients, got {got}")]
    Length { needed: usize, got: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
