use serde::{Deserialize, Serialize};

use super::elasticity::{weight_scenarios, WeightScenario};
use super::spearman::spearman;
use super::Cell;
use crate::error::{Error, Result};
use crate::model::{DecisionProblem, RankVector};
use crate::ranking::Variant;

/// Mean correlation per variant over an inclusive 1-based scenario window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowSummary {
    pub first: usize,
    pub last: usize,
    /// `None` when no scenario in the window produced a correlation.
    pub mean_scc: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSuiteReport {
    pub variants: Vec<Variant>,
    pub scenarios: Vec<WeightScenario>,
    /// Ranking of each variant under the original weights.
    pub baselines: Vec<Cell<RankVector>>,
    /// `[variant][scenario]`
    pub rankings: Vec<Vec<Cell<RankVector>>>,
    /// Spearman correlation of each scenario ranking with its variant's baseline, `[variant][scenario]`.
    pub scc_vs_base: Vec<Vec<Cell<f64>>>,
    /// Pairwise correlation between variants within each scenario, `[scenario][variant][variant]`.
    pub cross_variant_scc: Vec<Vec<Vec<Cell<f64>>>>,
    pub windows: Vec<WindowSummary>,
}

impl ScenarioSuiteReport {
    /// Mean of the available baseline correlations of `variant` over
    /// scenarios `first..=last` (1-based).
    pub fn window_mean(&self, variant: usize, first: usize, last: usize) -> Option<f64> {
        let values: Vec<f64> = self.scc_vs_base[variant]
            .iter()
            .zip(&self.scenarios)
            .filter(|(_, s)| (first..=last).contains(&s.index))
            .filter_map(|(c, _)| c.value().copied())
            .collect();
        if values.is_empty() {
            None
        } else {
            Some(values.iter().sum::<f64>() / values.len() as f64)
        }
    }

    fn summarize(&self, first: usize, last: usize) -> WindowSummary {
        WindowSummary {
            first,
            last,
            mean_scc: (0..self.variants.len())
                .map(|v| self.window_mean(v, first, last))
                .collect(),
        }
    }
}

/// Re-ranks `problem` under `count` weight scenarios for every variant and
/// correlates each scenario ranking with the variant's baseline ranking.
///
/// A single-criterion problem has no weight to move: all of its scenarios
/// carry the unit weight unchanged.
pub fn sensitivity_suite(
    problem: &DecisionProblem,
    variants: &[Variant],
    count: usize,
) -> Result<ScenarioSuiteReport> {
    let scenarios = if problem.n_criteria() == 1 {
        if count < 2 {
            return Err(Error::TooFewScenarios(count));
        }
        (1..=count)
            .map(|index| WeightScenario {
                index,
                delta_x: 0.0,
                weights: vec![1.0],
            })
            .collect()
    } else {
        weight_scenarios(&problem.weights(), count)?
    };
    sensitivity_suite_with_scenarios(problem, variants, scenarios)
}

/// Same as [`sensitivity_suite`] over caller-supplied scenarios.
pub fn sensitivity_suite_with_scenarios(
    problem: &DecisionProblem,
    variants: &[Variant],
    scenarios: Vec<WeightScenario>,
) -> Result<ScenarioSuiteReport> {
    if let Some(s) = scenarios
        .iter()
        .find(|s| s.weights.len() != problem.n_criteria())
    {
        return Err(Error::DimensionMismatch(format!(
            "scenario {} has {} weights for {} criteria",
            s.index,
            s.weights.len(),
            problem.n_criteria()
        )));
    }

    let baselines: Vec<Cell<RankVector>> =
        variants.iter().map(|v| v.rank(problem).into()).collect();
    let rankings: Vec<Vec<Cell<RankVector>>> = variants
        .iter()
        .map(|v| {
            scenarios
                .iter()
                .map(|s| v.rank_with_weights(problem, &s.weights).into())
                .collect()
        })
        .collect();

    let scc_vs_base = baselines
        .iter()
        .zip(&rankings)
        .map(|(base, row)| row.iter().map(|r| correlate(base, r)).collect())
        .collect();

    let cross_variant_scc = (0..scenarios.len())
        .map(|k| {
            (0..variants.len())
                .map(|a| {
                    (0..variants.len())
                        .map(|b| correlate(&rankings[a][k], &rankings[b][k]))
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut report = ScenarioSuiteReport {
        variants: variants.to_vec(),
        scenarios,
        baselines,
        rankings,
        scc_vs_base,
        cross_variant_scc,
        windows: Vec::new(),
    };
    let count = report.scenarios.len();
    if count > 0 {
        report.windows.push(report.summarize(1, count.min(5)));
    }
    if count > 5 {
        report.windows.push(report.summarize(6, count));
    }
    Ok(report)
}

fn correlate(a: &Cell<RankVector>, b: &Cell<RankVector>) -> Cell<f64> {
    match (a, b) {
        (Cell::Value(a), Cell::Value(b)) => spearman(a, b).into(),
        (Cell::Error(e), _) | (_, Cell::Error(e)) => Cell::Error(format!("ranking failed: {e}")),
    }
}
