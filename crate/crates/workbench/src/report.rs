//! Versioned report documents and their flat CSV companions.

use madm_core::robustness::{Cell, DynamicReport, ScenarioSuiteReport};
use madm_core::{RankVector, TopsisOutcome, Variant, VikorOutcome};
use serde::{Deserialize, Serialize};

use crate::problem_file::ProblemFile;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: u32,
    pub input: ProblemFile,
    pub payload: Payload,
}

impl ReportFile {
    pub fn new(input: ProblemFile, payload: Payload) -> Self {
        Self {
            version: REPORT_VERSION,
            input,
            payload,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "result", rename_all = "lowercase")]
pub enum Payload {
    Rank(RankOutcome),
    Sensitivity(ScenarioSuiteReport),
    Dynamic(DynamicReport),
    Compare(Comparison),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankOutcome {
    Topsis(TopsisOutcome),
    Vikor(VikorOutcome),
}

impl RankOutcome {
    pub fn ranking(&self) -> &RankVector {
        match self {
            RankOutcome::Topsis(t) => &t.ranking,
            RankOutcome::Vikor(v) => &v.ranking,
        }
    }

    /// Column titles and per-alternative values for the printed table.
    pub fn score_columns(&self) -> Vec<(&'static str, &[f64])> {
        match self {
            RankOutcome::Topsis(t) => {
                vec![("D+", &t.d_plus), ("D-", &t.d_minus), ("CC", &t.closeness)]
            }
            RankOutcome::Vikor(v) => vec![("S", &v.s), ("R", &v.r), ("Q", &v.q)],
        }
    }
}

/// All variants on one problem with pairwise rank correlations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub variants: Vec<Variant>,
    pub rankings: Vec<Cell<RankVector>>,
    /// `[variant][variant]`
    pub scc: Vec<Vec<Cell<f64>>>,
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

fn cell_text<T: ToString>(c: &Cell<T>) -> String {
    c.value().map(T::to_string).unwrap_or_default()
}

/// One row per alternative: name, score columns, rank.
pub fn rank_csv(alternatives: &[String], outcome: &RankOutcome) -> String {
    let cols = outcome.score_columns();
    let mut header = vec!["alternative".to_owned()];
    header.extend(cols.iter().map(|(t, _)| t.to_string()));
    header.push("rank".into());
    let mut rows = vec![header];
    for (i, name) in alternatives.iter().enumerate() {
        let mut row = vec![name.clone()];
        row.extend(cols.iter().map(|(_, v)| v[i].to_string()));
        row.push(outcome.ranking().ranks[i].to_string());
        rows.push(row);
    }
    csv_string(rows)
}

/// Plot-ready long table: scenario, shift, method, correlation with the baseline.
pub fn scc_plot_csv(report: &ScenarioSuiteReport) -> String {
    let mut rows = vec![vec![
        "scenario".into(),
        "delta_x".into(),
        "method".into(),
        "scc".into(),
    ]];
    for (v, variant) in report.variants.iter().enumerate() {
        for (s, scenario) in report.scenarios.iter().enumerate() {
            rows.push(vec![
                scenario.index.to_string(),
                scenario.delta_x.to_string(),
                variant.label(),
                cell_text(&report.scc_vs_base[v][s]),
            ]);
        }
    }
    csv_string(rows)
}

/// Scenario weight table: one row per scenario, one column per criterion.
pub fn scenario_weights_csv(report: &ScenarioSuiteReport, criteria: &[String]) -> String {
    let mut header = vec!["scenario".to_owned(), "delta_x".to_owned()];
    header.extend(criteria.iter().cloned());
    let mut rows = vec![header];
    for s in &report.scenarios {
        let mut row = vec![s.index.to_string(), s.delta_x.to_string()];
        row.extend(s.weights.iter().map(f64::to_string));
        rows.push(row);
    }
    csv_string(rows)
}

/// One row per method, stage and surviving alternative.
pub fn dynamic_csv(report: &DynamicReport) -> String {
    let mut rows = vec![vec![
        "method".into(),
        "stage".into(),
        "alternative".into(),
        "rank".into(),
        "removed_after".into(),
    ]];
    for t in &report.trajectories {
        for stage in &t.stages {
            for (k, &alt) in stage.surviving.iter().enumerate() {
                rows.push(vec![
                    t.variant.label(),
                    stage.index.to_string(),
                    report.alternatives[alt].clone(),
                    stage
                        .ranking
                        .value()
                        .map(|r| r.ranks[k].to_string())
                        .unwrap_or_default(),
                    (stage.removed == Some(alt)).to_string(),
                ]);
            }
        }
    }
    csv_string(rows)
}
