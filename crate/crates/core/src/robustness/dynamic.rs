use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::Cell;
use crate::error::{Error, Result};
use crate::model::{DecisionProblem, RankVector};
use crate::ranking::Variant;

/// Two alternatives whose relative order flipped between consecutive stages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversalEvent {
    /// Stage at which the new order was observed.
    pub stage: usize,
    /// Ahead at the previous stage, behind now (original alternative index).
    pub overtaken: usize,
    /// Behind at the previous stage, ahead now.
    pub overtaking: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicStage {
    pub index: usize,
    /// Original indices of the alternatives ranked at this stage.
    pub surviving: Vec<usize>,
    /// Ranking aligned with `surviving`.
    pub ranking: Cell<RankVector>,
    /// Alternative dropped before the next stage.
    pub removed: Option<usize>,
    /// Set when several alternatives shared the worst rank; the one with the
    /// highest original index is removed.
    pub tie_at_worst: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicTrajectory {
    pub variant: Variant,
    pub stages: Vec<DynamicStage>,
    pub reversals: Vec<ReversalEvent>,
    /// Best alternative of the full problem.
    pub initial_winner: Option<usize>,
    /// Whether the initial winner holds rank 1 at every stage.
    pub top_stable: bool,
    /// False when a ranking failure cut the run short.
    pub completed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicReport {
    pub alternatives: Vec<String>,
    pub trajectories: Vec<DynamicTrajectory>,
}

/// Pairs `(a, b)` of surviving alternatives where `a` ranked strictly ahead
/// of `b` in `prev` and strictly behind it in `next`. Ties never count.
///
/// `prev_members` and `surviving` give the original indices that `prev` and
/// `next` are aligned with; `surviving` must be a subset of `prev_members`.
pub fn detect_rank_reversal(
    prev: &RankVector,
    prev_members: &[usize],
    next: &RankVector,
    surviving: &[usize],
) -> Result<Vec<(usize, usize)>> {
    if prev.len() != prev_members.len() || next.len() != surviving.len() {
        return Err(Error::IndexMismatch(
            "ranking length differs from its member list".into(),
        ));
    }
    let prev_rank: HashMap<usize, usize> = prev_members
        .iter()
        .copied()
        .zip(prev.ranks.iter().copied())
        .collect();
    if prev_rank.len() != prev_members.len() {
        return Err(Error::IndexMismatch(
            "duplicate alternative in previous stage".into(),
        ));
    }
    let unique: HashSet<usize> = surviving.iter().copied().collect();
    if unique.len() != surviving.len() {
        return Err(Error::IndexMismatch(
            "duplicate surviving alternative".into(),
        ));
    }
    if let Some(missing) = surviving.iter().find(|a| !prev_rank.contains_key(a)) {
        return Err(Error::IndexMismatch(format!(
            "alternative {missing} was not ranked at the previous stage"
        )));
    }

    let mut pairs = Vec::new();
    for (i, &a) in surviving.iter().enumerate() {
        for (j, &b) in surviving.iter().enumerate() {
            if prev_rank[&a] < prev_rank[&b] && next.ranks[j] < next.ranks[i] {
                pairs.push((a, b));
            }
        }
    }
    Ok(pairs)
}

/// Repeatedly drops the worst-ranked alternative (per variant) and re-ranks
/// the rest until two alternatives remain.
pub fn dynamic_suite(problem: &DecisionProblem, variants: &[Variant]) -> Result<DynamicReport> {
    if problem.n_alternatives() < 3 {
        return Err(Error::TooFewAlternatives {
            required: 3,
            actual: problem.n_alternatives(),
        });
    }
    let trajectories = variants
        .iter()
        .map(|v| trajectory(problem, *v))
        .collect::<Result<Vec<_>>>()?;
    Ok(DynamicReport {
        alternatives: problem.alternatives().to_vec(),
        trajectories,
    })
}

fn trajectory(problem: &DecisionProblem, variant: Variant) -> Result<DynamicTrajectory> {
    let mut surviving: Vec<usize> = (0..problem.n_alternatives()).collect();
    let mut stages: Vec<DynamicStage> = Vec::new();
    let mut reversals = Vec::new();
    let mut completed = true;

    loop {
        let index = stages.len();
        let ranking = problem
            .select_alternatives(&surviving)
            .and_then(|sub| variant.rank(&sub));
        let ranking = match ranking {
            Ok(r) => r,
            Err(e) => {
                stages.push(DynamicStage {
                    index,
                    surviving,
                    ranking: Cell::Error(e.to_string()),
                    removed: None,
                    tie_at_worst: None,
                });
                completed = false;
                break;
            }
        };

        if let Some(prev) = stages.last() {
            if let Cell::Value(prev_ranking) = &prev.ranking {
                for (overtaken, overtaking) in
                    detect_rank_reversal(prev_ranking, &prev.surviving, &ranking, &surviving)?
                {
                    reversals.push(ReversalEvent {
                        stage: index,
                        overtaken,
                        overtaking,
                    });
                }
            }
        }

        if surviving.len() <= 2 {
            stages.push(DynamicStage {
                index,
                surviving,
                ranking: Cell::Value(ranking),
                removed: None,
                tie_at_worst: None,
            });
            break;
        }

        let worst: Vec<usize> = ranking.worst().into_iter().map(|i| surviving[i]).collect();
        let removed = *worst.iter().max().expect("ranking is non-empty");
        let tie_at_worst = (worst.len() > 1).then_some(worst);
        let next: Vec<usize> = surviving
            .iter()
            .copied()
            .filter(|&a| a != removed)
            .collect();
        stages.push(DynamicStage {
            index,
            surviving,
            ranking: Cell::Value(ranking),
            removed: Some(removed),
            tie_at_worst,
        });
        surviving = next;
    }

    let initial_winner = stages[0]
        .ranking
        .value()
        .map(|r| stages[0].surviving[r.order()[0]]);
    let top_stable = match initial_winner {
        Some(w) => stages.iter().all(|stage| match stage.ranking.value() {
            Some(r) => stage
                .surviving
                .iter()
                .position(|&a| a == w)
                .is_some_and(|i| r.ranks[i] == 1),
            None => false,
        }),
        None => false,
    };

    Ok(DynamicTrajectory {
        variant,
        stages,
        reversals,
        initial_winner,
        top_stable,
        completed,
    })
}
