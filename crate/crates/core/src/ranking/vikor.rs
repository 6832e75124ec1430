use serde::{Deserialize, Serialize};

use super::{check_weights, DEGENERATE_SPAN};
use crate::error::{Error, Result};
use crate::model::{ranks_from_scores, Better, DecisionProblem, Direction, RankVector};
use crate::normalization::{normalize, NormalizationScheme, NormalizedMatrix};

pub const DEFAULT_STRATEGY_WEIGHT: f64 = 0.5;

/// Every intermediate quantity of a VIKOR run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VikorOutcome {
    pub normalized: NormalizedMatrix,
    pub weights: Vec<f64>,
    /// Best normalized value per criterion.
    pub f_star: Vec<f64>,
    /// Worst normalized value per criterion.
    pub f_minus: Vec<f64>,
    /// Group utility.
    pub s: Vec<f64>,
    /// Individual regret.
    pub r: Vec<f64>,
    pub strategy_weight: f64,
    /// Compromise index, lower is better.
    pub q: Vec<f64>,
    pub ranking: RankVector,
}

pub fn vikor(
    problem: &DecisionProblem,
    scheme: NormalizationScheme,
    strategy_weight: f64,
) -> Result<VikorOutcome> {
    vikor_with_weights(problem, scheme, strategy_weight, &problem.weights())
}

/// VIKOR evaluated on the normalized matrix: the best and worst values of
/// each criterion are taken from normalized scores, not raw ones.
pub fn vikor_with_weights(
    problem: &DecisionProblem,
    scheme: NormalizationScheme,
    strategy_weight: f64,
    weights: &[f64],
) -> Result<VikorOutcome> {
    if !(0.0..=1.0).contains(&strategy_weight) {
        return Err(Error::InvalidStrategyWeight(strategy_weight));
    }
    check_weights(problem, weights)?;
    let normalized = normalize(problem, scheme)?;
    let n = normalized.n_cols();

    let mut f_star = Vec::with_capacity(n);
    let mut f_minus = Vec::with_capacity(n);
    for j in 0..n {
        let (lo, hi) = normalized
            .values
            .iter()
            .map(|row| row[j])
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        match normalized.preference(j) {
            Direction::Benefit => {
                f_star.push(hi);
                f_minus.push(lo);
            }
            Direction::Cost => {
                f_star.push(lo);
                f_minus.push(hi);
            }
        }
    }

    let mut s = Vec::with_capacity(normalized.n_rows());
    let mut r = Vec::with_capacity(normalized.n_rows());
    for row in &normalized.values {
        let mut sum = 0.0;
        let mut max = 0.0f64;
        for j in 0..n {
            let span = f_star[j] - f_minus[j];
            if span.abs() <= DEGENERATE_SPAN {
                continue;
            }
            let term = weights[j] * (f_star[j] - row[j]) / span;
            sum += term;
            max = max.max(term);
        }
        s.push(sum);
        r.push(max);
    }

    let s_term = unit_rescale(&s);
    let r_term = unit_rescale(&r);
    let q: Vec<f64> = s_term
        .iter()
        .zip(&r_term)
        .map(|(a, b)| strategy_weight * a + (1.0 - strategy_weight) * b)
        .collect();
    let ranking = ranks_from_scores(&q, Better::Lower)?;

    Ok(VikorOutcome {
        normalized,
        weights: weights.to_vec(),
        f_star,
        f_minus,
        s,
        r,
        strategy_weight,
        q,
        ranking,
    })
}

/// `(x - min) / (max - min)`, or all zeros when the values do not spread.
fn unit_rescale(values: &[f64]) -> Vec<f64> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = max - min;
    if span <= DEGENERATE_SPAN {
        return vec![0.0; values.len()];
    }
    values.iter().map(|v| (v - min) / span).collect()
}
