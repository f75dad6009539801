use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: numerator vanishes to order {num_order} but denominator to order {den_order} at {point}")]
    Pole {
        point: String,
        num_order: usize,
        den_order: usize,
    },

    #[error("parameters are not generic: {0}")]
    NotGeneric(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("generator index {index} out of range for H(m,1,{n})")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("residual pole at fusion stage {stage}: {detail}")]
    ResidualPole { stage: usize, detail: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
