//! Column-wise normalization of decision matrices.
//!
//! Vector, logarithmic and sum normalization are applied in their benefit
//! form to every column; the direction of a cost criterion is honoured later
//! when ideal points are chosen. Min-max normalization uses its
//! direction-specific form, so its output is always "higher is better".

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ColumnError, Error, Result};
use crate::model::{DecisionProblem, Direction};

/// Below this magnitude the log-sum denominator is treated as zero.
const LOG_SUM_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormalizationScheme {
    /// `x / sqrt(sum x^2)`
    Vector,
    /// `ln x / ln(prod x)`
    Logarithmic,
    /// `(x - min) / (max - min)` for benefit, `(max - x) / (max - min)` for cost.
    MinMax,
    /// `x / sum x`
    Sum,
}

impl NormalizationScheme {
    pub const ALL: [NormalizationScheme; 4] = [
        NormalizationScheme::Vector,
        NormalizationScheme::Logarithmic,
        NormalizationScheme::MinMax,
        NormalizationScheme::Sum,
    ];

    /// Short identifier used on the command line and in variant labels.
    pub fn short_name(self) -> &'static str {
        match self {
            Self::Vector => "vector",
            Self::Logarithmic => "log",
            Self::MinMax => "minmax",
            Self::Sum => "sum",
        }
    }

    /// Whether the scheme already folds the criterion direction into its output.
    pub fn is_direction_aware(self) -> bool {
        matches!(self, Self::MinMax)
    }
}

impl fmt::Display for NormalizationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for NormalizationScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "vector" | "vec" => Ok(Self::Vector),
            "log" | "logarithmic" | "ln" => Ok(Self::Logarithmic),
            "minmax" | "min-max" | "linear" => Ok(Self::MinMax),
            "sum" => Ok(Self::Sum),
            other => Err(format!(
                "unknown normalization `{other}` (expected vector, log, minmax or sum)"
            )),
        }
    }
}

/// Something suspicious but not invalid noticed while normalizing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum NormalizationWarning {
    /// A logarithmic column holds values below 1, whose logarithms are
    /// negative; columns still sum to one but order preservation no longer
    /// holds unconditionally.
    SubUnitLogInput { criterion: String },
}

/// Normalized scores, same shape as the source problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedMatrix {
    /// Row-major, one row per alternative.
    pub values: Vec<Vec<f64>>,
    pub scheme: NormalizationScheme,
    pub directions: Vec<Direction>,
    pub warnings: Vec<NormalizationWarning>,
}

impl NormalizedMatrix {
    pub fn n_rows(&self) -> usize {
        self.values.len()
    }

    pub fn n_cols(&self) -> usize {
        self.directions.len()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[j]).collect()
    }

    /// Direction in which normalized column `j` improves.
    pub fn preference(&self, j: usize) -> Direction {
        if self.scheme.is_direction_aware() {
            Direction::Benefit
        } else {
            self.directions[j]
        }
    }
}

fn check_positive(column: &[f64]) -> Result<(), ColumnError> {
    match column
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_nan() || **v <= 0.0)
    {
        Some((index, &value)) => Err(ColumnError::NonPositiveValue { index, value }),
        None => Ok(()),
    }
}

fn check_len(column: &[f64], required: usize) -> Result<(), ColumnError> {
    if column.len() < required {
        return Err(ColumnError::TooShort {
            required,
            actual: column.len(),
        });
    }
    Ok(())
}

/// `f_i = ln(x_i) / ln(prod_k x_k)`, with the product taken in log space.
pub fn log_normalize_column(column: &[f64]) -> Result<Vec<f64>, ColumnError> {
    check_len(column, 1)?;
    check_positive(column)?;
    let logs: Vec<f64> = column.iter().map(|x| x.ln()).collect();
    let denom: f64 = logs.iter().sum();
    if denom.abs() <= LOG_SUM_EPSILON {
        return Err(ColumnError::DegenerateColumn {
            reason: "logarithm of the column product is zero",
        });
    }
    Ok(logs.into_iter().map(|l| l / denom).collect())
}

/// `r_i = x_i / sqrt(sum_k x_k^2)`
pub fn vector_normalize_column(column: &[f64]) -> Result<Vec<f64>, ColumnError> {
    check_len(column, 1)?;
    check_positive(column)?;
    let norm = column.iter().map(|x| x * x).sum::<f64>().sqrt();
    Ok(column.iter().map(|x| x / norm).collect())
}

pub fn minmax_normalize_column(
    column: &[f64],
    direction: Direction,
) -> Result<Vec<f64>, ColumnError> {
    check_len(column, 2)?;
    check_positive(column)?;
    let max = column.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = column.iter().copied().fold(f64::INFINITY, f64::min);
    let range = max - min;
    if range <= 0.0 {
        return Err(ColumnError::DegenerateColumn {
            reason: "maximum equals minimum",
        });
    }
    Ok(column
        .iter()
        .map(|&x| match direction {
            Direction::Benefit => (x - min) / range,
            Direction::Cost => (max - x) / range,
        })
        .collect())
}

/// `r_i = x_i / sum_k x_k`
pub fn sum_normalize_column(column: &[f64]) -> Result<Vec<f64>, ColumnError> {
    check_len(column, 1)?;
    check_positive(column)?;
    let total: f64 = column.iter().sum();
    Ok(column.iter().map(|x| x / total).collect())
}

/// Normalizes every column of `problem` with `scheme`.
pub fn normalize(
    problem: &DecisionProblem,
    scheme: NormalizationScheme,
) -> Result<NormalizedMatrix> {
    let m = problem.n_alternatives();
    let mut values = vec![Vec::with_capacity(problem.n_criteria()); m];
    let mut warnings = Vec::new();

    for (j, criterion) in problem.criteria().iter().enumerate() {
        let column = problem.column(j);
        let normalized = match scheme {
            NormalizationScheme::Vector => vector_normalize_column(&column),
            NormalizationScheme::Logarithmic => {
                if column.iter().any(|&x| x < 1.0) {
                    warnings.push(NormalizationWarning::SubUnitLogInput {
                        criterion: criterion.name.clone(),
                    });
                }
                log_normalize_column(&column)
            }
            NormalizationScheme::MinMax => minmax_normalize_column(&column, criterion.direction),
            NormalizationScheme::Sum => sum_normalize_column(&column),
        }
        .map_err(|source| Error::Normalization {
            criterion: criterion.name.clone(),
            source,
        })?;
        for (row, v) in values.iter_mut().zip(normalized) {
            row.push(v);
        }
    }

    Ok(NormalizedMatrix {
        values,
        scheme,
        directions: problem.directions(),
        warnings,
    })
}
