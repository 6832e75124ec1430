use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the single-column normalization routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ColumnError {
    #[error("entry {index} is {value}, normalization requires strictly positive values")]
    NonPositiveValue { index: usize, value: f64 },
    #[error("column is degenerate: {reason}")]
    DegenerateColumn { reason: &'static str },
    #[error("column needs at least {required} entries, got {actual}")]
    TooShort { required: usize, actual: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {value} for alternative `{alternative}` on criterion `{criterion}` is not strictly positive")]
    NonPositiveValue {
        alternative: String,
        criterion: String,
        value: f64,
    },
    #[error("criterion weights sum to {sum}, expected 1 within {tolerance}")]
    WeightSumViolation { sum: f64, tolerance: f64 },
    #[error("criterion `{criterion}` has weight {weight}, weights must lie in (0, 1]")]
    InvalidWeight { criterion: String, weight: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("at least {required} alternatives are required, got {actual}")]
    TooFewAlternatives { required: usize, actual: usize },
    #[error("a decision problem needs at least one criterion")]
    NoCriteria,
    #[error("name `{0}` is used more than once")]
    DuplicateName(String),
    #[error("score at position {index} is not finite ({value})")]
    NonFiniteScore { index: usize, value: f64 },
    #[error("criterion `{criterion}`: {source}")]
    Normalization {
        criterion: String,
        #[source]
        source: ColumnError,
    },
    #[error(
        "positive and negative ideal solutions coincide in every criterion, closeness is undefined"
    )]
    IdenticalIdeals,
    #[error("strategy weight {0} is outside [0, 1]")]
    InvalidStrategyWeight(f64),
    #[error("the most important criterion carries all the weight, no mass is left to compensate")]
    DegenerateWeights,
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
    #[error("at least 2 scenarios are required, got {0}")]
    TooFewScenarios(usize),
    #[error("rank vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("rank vector has zero variance (every alternative tied)")]
    ZeroVariance,
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
}
