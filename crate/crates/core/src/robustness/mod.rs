//! Robustness of rankings under weight shifts and alternative removal.

mod dynamic;
mod elasticity;
mod sensitivity;
mod spearman;

use serde::{Deserialize, Serialize};

pub use self::dynamic::{
    detect_rank_reversal, dynamic_suite, DynamicReport, DynamicStage, DynamicTrajectory,
    ReversalEvent,
};
pub use self::elasticity::{
    elasticity_coefficients, weight_scenarios, ElasticityVector, WeightScenario,
    DEFAULT_SCENARIO_COUNT,
};
pub use self::sensitivity::{
    sensitivity_suite, sensitivity_suite_with_scenarios, ScenarioSuiteReport, WindowSummary,
};
pub use self::spearman::spearman;

/// A per-item result inside a report; failures are recorded, not propagated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell<T> {
    Value(T),
    Error(String),
}

impl<T> Cell<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Cell::Value(v) => Some(v),
            Cell::Error(_) => None,
        }
    }

    pub fn error(&self) -> Option<&str> {
        match self {
            Cell::Value(_) => None,
            Cell::Error(e) => Some(e),
        }
    }
}

impl<T> From<crate::Result<T>> for Cell<T> {
    fn from(r: crate::Result<T>) -> Self {
        match r {
            Ok(v) => Cell::Value(v),
            Err(e) => Cell::Error(e.to_string()),
        }
    }
}
