//! Reference supplier-selection problems used throughout the test suites and
//! shipped with the command-line workbench.

use crate::model::{Criterion, DecisionProblem};

fn build(criteria: Vec<Criterion>, rows: &[&[f64]]) -> DecisionProblem {
    let alternatives = (1..=rows.len()).map(|i| format!("A{i}")).collect();
    let values = rows.iter().map(|r| r.to_vec()).collect();
    DecisionProblem::new(criteria, alternatives, values).expect("reference problem is valid")
}

/// Four suppliers rated on five benefit criteria.
pub fn supplier_selection_small() -> DecisionProblem {
    let weights = [0.197, 0.163, 0.176, 0.197, 0.267];
    let criteria = weights
        .iter()
        .enumerate()
        .map(|(j, &w)| Criterion::benefit(format!("C{}", j + 1), w))
        .collect();
    build(
        criteria,
        &[
            &[8.0, 7.0, 7.0, 9.0, 8.0],
            &[7.0, 9.0, 8.0, 7.0, 8.0],
            &[8.0, 8.0, 8.0, 6.0, 9.0],
            &[9.0, 6.0, 7.0, 8.0, 7.0],
        ],
    )
}

/// Eight suppliers rated on six criteria, C3 and C4 being cost criteria.
pub fn supplier_selection_large() -> DecisionProblem {
    let criteria = vec![
        Criterion::benefit("C1", 0.12),
        Criterion::benefit("C2", 0.2),
        Criterion::cost("C3", 0.16),
        Criterion::cost("C4", 0.32),
        Criterion::benefit("C5", 0.15),
        Criterion::benefit("C6", 0.05),
    ];
    build(
        criteria,
        &[
            &[4.0, 8.0, 8.0, 7.0, 9.0, 8.0],
            &[6.0, 7.0, 7.0, 8.0, 9.0, 6.0],
            &[7.0, 6.0, 5.0, 8.0, 7.0, 4.0],
            &[6.0, 6.0, 4.0, 6.0, 5.0, 4.0],
            &[9.0, 9.0, 4.0, 6.0, 6.0, 7.0],
            &[7.0, 9.0, 8.0, 8.0, 7.0, 8.0],
            &[8.0, 8.0, 9.0, 8.0, 6.0, 9.0],
            &[9.0, 4.0, 7.0, 5.0, 8.0, 6.0],
        ],
    )
}
