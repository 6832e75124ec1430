use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::WEIGHT_SUM_TOLERANCE;

pub const DEFAULT_SCENARIO_COUNT: usize = 21;

/// Scenario weights within this distance of zero are snapped to zero;
/// anything more negative is rejected.
const CLAMP_TOLERANCE: f64 = 1e-12;
const SCENARIO_SUM_TOLERANCE: f64 = 1e-9;

/// Proportional compensation of the remaining weights when the most
/// important criterion's weight moves by `delta_x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElasticityVector {
    /// Index of the heaviest criterion (first one on ties).
    pub most_important: usize,
    /// 1 for the most important criterion, `w_c / (1 - w_s)` for the others.
    pub alpha: Vec<f64>,
    /// Admissible shift range `[-w_s, 1 - w_s]`.
    pub delta_bounds: (f64, f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightScenario {
    /// 1-based position in the generated sequence.
    pub index: usize,
    pub delta_x: f64,
    pub weights: Vec<f64>,
}

fn check_base_weights(weights: &[f64]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::InvalidWeights("no weights given".into()));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
        return Err(Error::InvalidWeights(format!(
            "weight {w} is negative or not finite"
        )));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(Error::WeightSumViolation {
            sum,
            tolerance: WEIGHT_SUM_TOLERANCE,
        });
    }
    Ok(())
}

pub fn elasticity_coefficients(weights: &[f64]) -> Result<ElasticityVector> {
    check_base_weights(weights)?;
    let most_important =
        weights
            .iter()
            .enumerate()
            .fold(0, |best, (j, &w)| if w > weights[best] { j } else { best });
    let ws = weights[most_important];
    let rest = 1.0 - ws;
    if rest <= CLAMP_TOLERANCE {
        return Err(Error::DegenerateWeights);
    }
    let alpha = weights
        .iter()
        .enumerate()
        .map(|(j, &w)| if j == most_important { 1.0 } else { w / rest })
        .collect();
    Ok(ElasticityVector {
        most_important,
        alpha,
        delta_bounds: (-ws, rest),
    })
}

/// `count` evenly spaced shifts over the full admissible range, both ends included.
pub fn weight_scenarios(weights: &[f64], count: usize) -> Result<Vec<WeightScenario>> {
    if count < 2 {
        return Err(Error::TooFewScenarios(count));
    }
    let elasticity = elasticity_coefficients(weights)?;
    let s = elasticity.most_important;
    let (lo, hi) = elasticity.delta_bounds;
    let steps = (count - 1) as f64;

    (0..count)
        .map(|k| {
            let delta_x = if k + 1 == count {
                hi
            } else {
                lo + (hi - lo) * k as f64 / steps
            };
            let shifted = weights
                .iter()
                .zip(&elasticity.alpha)
                .enumerate()
                .map(|(j, (&w, &a))| {
                    let v = if j == s { w + delta_x } else { w - delta_x * a };
                    if v.abs() <= CLAMP_TOLERANCE {
                        Ok(0.0)
                    } else if v < 0.0 {
                        Err(Error::InvalidWeights(format!(
                            "scenario {} drives weight {j} to {v}",
                            k + 1
                        )))
                    } else {
                        Ok(v)
                    }
                })
                .collect::<Result<Vec<f64>>>()?;
            let sum: f64 = shifted.iter().sum();
            if (sum - 1.0).abs() > SCENARIO_SUM_TOLERANCE {
                return Err(Error::InvalidWeights(format!(
                    "scenario {} weights sum to {sum}",
                    k + 1
                )));
            }
            Ok(WeightScenario {
                index: k + 1,
                delta_x,
                weights: shifted,
            })
        })
        .collect()
}
