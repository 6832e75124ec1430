//! Decision problems, criteria and rankings.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance under which two scores are considered tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Allowed deviation of the weight sum from 1.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

/// Optimization direction of a criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Larger raw values are preferred.
    Benefit,
    /// Smaller raw values are preferred.
    Cost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Criterion {
    pub name: String,
    pub direction: Direction,
    pub weight: f64,
}

impl Criterion {
    pub fn new(name: impl Into<String>, direction: Direction, weight: f64) -> Self {
        Self {
            name: name.into(),
            direction,
            weight,
        }
    }

    pub fn benefit(name: impl Into<String>, weight: f64) -> Self {
        Self::new(name, Direction::Benefit, weight)
    }

    pub fn cost(name: impl Into<String>, weight: f64) -> Self {
        Self::new(name, Direction::Cost, weight)
    }
}

/// An alternatives x criteria performance matrix with weighted, directed criteria.
///
/// Instances are always validated: every value is strictly positive, the
/// matrix is rectangular, there are at least two alternatives and one
/// criterion, names are unique and the weights sum to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionProblem {
    criteria: Vec<Criterion>,
    alternatives: Vec<String>,
    values: Vec<Vec<f64>>,
}

impl DecisionProblem {
    /// Builds and validates a problem. `values` is row-major, one row per alternative.
    pub fn new(
        criteria: Vec<Criterion>,
        alternatives: Vec<String>,
        values: Vec<Vec<f64>>,
    ) -> Result<Self> {
        validate_problem(Self {
            criteria,
            alternatives,
            values,
        })
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    /// Row-major performance matrix.
    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.criteria.iter().map(|c| c.weight).collect()
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.criteria.iter().map(|c| c.direction).collect()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[j]).collect()
    }

    /// Keeps only the listed alternatives, in the given order.
    pub fn select_alternatives(&self, keep: &[usize]) -> Result<Self> {
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.n_alternatives()) {
            return Err(Error::IndexMismatch(format!(
                "alternative index {bad} out of range for {} alternatives",
                self.n_alternatives()
            )));
        }
        Self::new(
            self.criteria.clone(),
            keep.iter().map(|&i| self.alternatives[i].clone()).collect(),
            keep.iter().map(|&i| self.values[i].clone()).collect(),
        )
    }

    /// Same problem with every value of criterion `j` multiplied by `factor`.
    pub fn scale_column(&self, j: usize, factor: f64) -> Result<Self> {
        let mut values = self.values.clone();
        for row in &mut values {
            row[j] *= factor;
        }
        Self::new(self.criteria.clone(), self.alternatives.clone(), values)
    }

    /// Same problem with replaced criterion weights.
    pub fn with_weights(&self, weights: &[f64]) -> Result<Self> {
        if weights.len() != self.n_criteria() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} criteria",
                weights.len(),
                self.n_criteria()
            )));
        }
        let criteria = self
            .criteria
            .iter()
            .zip(weights)
            .map(|(c, &w)| Criterion {
                weight: w,
                ..c.clone()
            })
            .collect();
        Self::new(criteria, self.alternatives.clone(), self.values.clone())
    }
}

/// Checks every [`DecisionProblem`] invariant and hands the problem back unchanged.
pub fn validate_problem(problem: DecisionProblem) -> Result<DecisionProblem> {
    let m = problem.alternatives.len();
    let n = problem.criteria.len();
    if n == 0 {
        return Err(Error::NoCriteria);
    }
    if m < 2 {
        return Err(Error::TooFewAlternatives {
            required: 2,
            actual: m,
        });
    }
    if problem.values.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "{} rows for {m} alternatives",
            problem.values.len()
        )));
    }
    for (name, row) in problem.alternatives.iter().zip(&problem.values) {
        if row.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "alternative `{name}` has {} values for {n} criteria",
                row.len()
            )));
        }
    }
    ensure_unique(problem.criteria.iter().map(|c| c.name.as_str()))?;
    ensure_unique(problem.alternatives.iter().map(String::as_str))?;

    for (name, row) in problem.alternatives.iter().zip(&problem.values) {
        for (criterion, &value) in problem.criteria.iter().zip(row) {
            // NaN fails this comparison too.
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::NonPositiveValue {
                    alternative: name.clone(),
                    criterion: criterion.name.clone(),
                    value,
                });
            }
        }
    }
    for c in &problem.criteria {
        if !(c.weight > 0.0 && c.weight <= 1.0) {
            return Err(Error::InvalidWeight {
                criterion: c.name.clone(),
                weight: c.weight,
            });
        }
    }
    let sum: f64 = problem.criteria.iter().map(|c| c.weight).sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(Error::WeightSumViolation {
            sum,
            tolerance: WEIGHT_SUM_TOLERANCE,
        });
    }
    Ok(problem)
}

fn ensure_unique<'a>(names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if !seen.insert(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
    }
    Ok(())
}

/// Which end of a score scale is preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Better {
    Higher,
    Lower,
}

/// Competition ranking (1 = best) of a set of alternatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankVector {
    /// Rank per alternative, aligned with the scored alternatives.
    pub ranks: Vec<usize>,
    pub scores: Vec<f64>,
    pub better: Better,
    /// Groups of alternative indices sharing a rank, each sorted ascending.
    pub ties: Vec<Vec<usize>>,
}

impl RankVector {
    /// Builds a ranking from plain integer ranks (1 = best).
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        let scores: Vec<f64> = ranks.iter().map(|&r| r as f64).collect();
        ranks_from_scores(&scores, Better::Lower)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Alternative indices from best to worst; ties keep index order.
    pub fn order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| (self.ranks[i], i));
        idx
    }

    /// Every alternative sharing the worst rank, ascending by index.
    pub fn worst(&self) -> Vec<usize> {
        let worst = self.ranks.iter().copied().max().unwrap_or(0);
        (0..self.len())
            .filter(|&i| self.ranks[i] == worst)
            .collect()
    }

    /// Fractional ranks where tied alternatives share the mean of the
    /// positions they occupy.
    pub fn average_ranks(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.ranks.iter().map(|&r| r as f64).collect();
        for group in &self.ties {
            let shared = self.ranks[group[0]] as f64 + (group.len() as f64 - 1.0) / 2.0;
            for &i in group {
                out[i] = shared;
            }
        }
        out
    }
}

/// Ranks scores so that rank 1 is the best according to `better`.
///
/// Scores within [`TIE_TOLERANCE`] of the best member of their group share
/// that group's rank (competition ranking, e.g. 1, 1, 3). Groups are anchored
/// on their first member so tolerance does not chain across a run of close values.
pub fn ranks_from_scores(scores: &[f64], better: Better) -> Result<RankVector> {
    if let Some((index, &value)) = scores.iter().enumerate().find(|(_, s)| !s.is_finite()) {
        return Err(Error::NonFiniteScore { index, value });
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        let ord = scores[a].total_cmp(&scores[b]);
        let ord = match better {
            Better::Higher => ord.reverse(),
            Better::Lower => ord,
        };
        ord.then(a.cmp(&b))
    });

    let mut ranks = vec![0; scores.len()];
    let mut ties = Vec::new();
    let mut pos = 0;
    while pos < order.len() {
        let anchor = scores[order[pos]];
        let mut end = pos + 1;
        while end < order.len() && (scores[order[end]] - anchor).abs() <= TIE_TOLERANCE {
            end += 1;
        }
        for &i in &order[pos..end] {
            ranks[i] = pos + 1;
        }
        if end - pos > 1 {
            let mut group = order[pos..end].to_vec();
            group.sort_unstable();
            ties.push(group);
        }
        pos = end;
    }
    ties.sort();
    Ok(RankVector {
        ranks,
        scores: scores.to_vec(),
        better,
        ties,
    })
}
