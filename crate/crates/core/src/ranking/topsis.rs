use serde::{Deserialize, Serialize};

use super::check_weights;
use crate::error::{Error, Result};
use crate::model::{ranks_from_scores, Better, DecisionProblem, Direction, RankVector};
use crate::normalization::{normalize, NormalizationScheme, NormalizedMatrix};

/// Every intermediate quantity of a TOPSIS run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopsisOutcome {
    pub normalized: NormalizedMatrix,
    pub weights: Vec<f64>,
    /// `w_j * r_ij`, row-major.
    pub weighted: Vec<Vec<f64>>,
    /// Positive ideal solution per criterion.
    pub pis: Vec<f64>,
    /// Negative ideal solution per criterion.
    pub nis: Vec<f64>,
    pub d_plus: Vec<f64>,
    pub d_minus: Vec<f64>,
    /// `D- / (D+ + D-)`, higher is better.
    pub closeness: Vec<f64>,
    pub ranking: RankVector,
}

pub fn topsis(problem: &DecisionProblem, scheme: NormalizationScheme) -> Result<TopsisOutcome> {
    topsis_with_weights(problem, scheme, &problem.weights())
}

/// TOPSIS with Euclidean separations from the positive and negative ideals.
pub fn topsis_with_weights(
    problem: &DecisionProblem,
    scheme: NormalizationScheme,
    weights: &[f64],
) -> Result<TopsisOutcome> {
    check_weights(problem, weights)?;
    let normalized = normalize(problem, scheme)?;
    let n = normalized.n_cols();

    let weighted: Vec<Vec<f64>> = normalized
        .values
        .iter()
        .map(|row| row.iter().zip(weights).map(|(r, w)| r * w).collect())
        .collect();

    let mut pis = Vec::with_capacity(n);
    let mut nis = Vec::with_capacity(n);
    for j in 0..n {
        let (lo, hi) = weighted
            .iter()
            .map(|row| row[j])
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        match normalized.preference(j) {
            Direction::Benefit => {
                pis.push(hi);
                nis.push(lo);
            }
            Direction::Cost => {
                pis.push(lo);
                nis.push(hi);
            }
        }
    }
    if pis.iter().zip(&nis).all(|(p, q)| p == q) {
        return Err(Error::IdenticalIdeals);
    }

    let separation = |row: &[f64], ideal: &[f64]| {
        row.iter()
            .zip(ideal)
            .map(|(v, i)| (v - i).powi(2))
            .sum::<f64>()
            .sqrt()
    };
    let d_plus: Vec<f64> = weighted.iter().map(|row| separation(row, &pis)).collect();
    let d_minus: Vec<f64> = weighted.iter().map(|row| separation(row, &nis)).collect();
    let closeness: Vec<f64> = d_plus
        .iter()
        .zip(&d_minus)
        .map(|(p, m)| m / (p + m))
        .collect();
    let ranking = ranks_from_scores(&closeness, Better::Higher)?;

    Ok(TopsisOutcome {
        normalized,
        weights: weights.to_vec(),
        weighted,
        pis,
        nis,
        d_plus,
        d_minus,
        closeness,
        ranking,
    })
}
