//! Ranking methods built on a normalized decision matrix.

mod topsis;
mod vikor;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use self::topsis::{topsis, topsis_with_weights, TopsisOutcome};
pub use self::vikor::{vikor, vikor_with_weights, VikorOutcome, DEFAULT_STRATEGY_WEIGHT};

use crate::error::{Error, Result};
use crate::model::{DecisionProblem, RankVector, WEIGHT_SUM_TOLERANCE};
use crate::normalization::NormalizationScheme;

/// Spans at or below this are treated as zero (no discrimination).
pub(crate) const DEGENERATE_SPAN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Method {
    Topsis,
    Vikor { strategy_weight: f64 },
}

impl Method {
    pub fn vikor_default() -> Self {
        Method::Vikor {
            strategy_weight: DEFAULT_STRATEGY_WEIGHT,
        }
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            Method::Topsis => "topsis",
            Method::Vikor { .. } => "vikor",
        }
    }
}

/// A ranking method paired with the normalization it runs on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Variant {
    pub method: Method,
    pub scheme: NormalizationScheme,
}

impl Variant {
    pub fn new(method: Method, scheme: NormalizationScheme) -> Self {
        Self { method, scheme }
    }

    pub fn topsis(scheme: NormalizationScheme) -> Self {
        Self::new(Method::Topsis, scheme)
    }

    pub fn vikor(scheme: NormalizationScheme) -> Self {
        Self::new(Method::vikor_default(), scheme)
    }

    /// TOPSIS and VIKOR, each on vector and logarithmic normalization.
    pub fn standard_four() -> Vec<Variant> {
        use NormalizationScheme::{Logarithmic, Vector};
        vec![
            Self::topsis(Vector),
            Self::topsis(Logarithmic),
            Self::vikor(Vector),
            Self::vikor(Logarithmic),
        ]
    }

    /// Identifier such as `topsis-log`.
    pub fn label(&self) -> String {
        format!("{}-{}", self.method.short_name(), self.scheme.short_name())
    }

    pub fn rank(&self, problem: &DecisionProblem) -> Result<RankVector> {
        self.rank_with_weights(problem, &problem.weights())
    }

    /// Ranks `problem` with `weights` in place of the criterion weights.
    /// Zero weights are allowed here.
    pub fn rank_with_weights(
        &self,
        problem: &DecisionProblem,
        weights: &[f64],
    ) -> Result<RankVector> {
        match self.method {
            Method::Topsis => Ok(topsis_with_weights(problem, self.scheme, weights)?.ranking),
            Method::Vikor { strategy_weight } => {
                Ok(vikor_with_weights(problem, self.scheme, strategy_weight, weights)?.ranking)
            }
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Variant {
    type Err = String;

    /// Parses `<method>-<scheme>`, e.g. `vikor-vector` or `topsis-log`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (method, scheme) = s.trim().split_once(['-', ':']).ok_or_else(|| {
            format!("variant `{s}` must look like <method>-<scheme>, e.g. topsis-log")
        })?;
        let scheme: NormalizationScheme = scheme.parse()?;
        match method.to_ascii_lowercase().as_str() {
            "topsis" => Ok(Variant::topsis(scheme)),
            "vikor" => Ok(Variant::vikor(scheme)),
            other => Err(format!(
                "unknown method `{other}` (expected topsis or vikor)"
            )),
        }
    }
}

/// Weights used by a ranking run: one per criterion, finite, non-negative,
/// summing to one.
pub(crate) fn check_weights(problem: &DecisionProblem, weights: &[f64]) -> Result<()> {
    if weights.len() != problem.n_criteria() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for {} criteria",
            weights.len(),
            problem.n_criteria()
        )));
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
