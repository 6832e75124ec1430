//! Multi-attribute decision making with TOPSIS and VIKOR.
//!
//! A [`DecisionProblem`] holds a strictly positive alternatives x criteria
//! matrix together with per-criterion direction and weight. It can be
//! normalized with any [`NormalizationScheme`] (including the logarithmic
//! scheme, whose columns always sum to one) and ranked by [`topsis`] or
//! [`vikor`]. The [`robustness`] module re-ranks problems under shifted
//! weights and under successive removal of the worst alternative.

pub mod datasets;
mod error;
pub mod model;
pub mod normalization;
pub mod ranking;
pub mod robustness;

pub use error::{ColumnError, Error, Result};
pub use model::{
    ranks_from_scores, validate_problem, Better, Criterion, DecisionProblem, Direction, RankVector,
    TIE_TOLERANCE, WEIGHT_SUM_TOLERANCE,
};
pub use normalization::{
    log_normalize_column, minmax_normalize_column, normalize, sum_normalize_column,
    vector_normalize_column, NormalizationScheme, NormalizationWarning, NormalizedMatrix,
};
pub use ranking::{topsis, vikor, Method, TopsisOutcome, Variant, VikorOutcome};
