use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} is not invertible in the coefficient ring")]
    NotInvertible { what: &'static str },

    #[error("geometric tail with ratio 1 diverges")]
    DivergentTail,

    #[error("enumeration of {n} would exceed the cap of {cap} partitions")]
    ResourceLimit { n: u64, cap: u64 },

    #[error("{pipeline}: coefficient {index} {reason} ({value})")]
    Coefficient {
        pipeline: &'static str,
        index: usize,
        value: String,
        reason: &'static str,
    },

    #[error("invalid parameter: {0}")]
    Domain(String),

    #[error("partition {parts:?} matches no injection case")]
    NoCase { parts: Vec<u64> },

    #[error("coefficient for n = {0} is not available")]
    MissingCoefficient(u64),

    #[error("grid must be strictly increasing")]
    GridNotIncreasing,

    #[error("quadrature did not converge within depth {0}")]
    NoConvergence(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}
