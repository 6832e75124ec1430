mod common;

use common::{max_abs_diff, oracle, problem};
use madm_core::robustness::{
    dynamic_suite, sensitivity_suite_with_scenarios, spearman, weight_scenarios, WeightScenario,
};
use madm_core::{
    log_normalize_column, minmax_normalize_column, normalize, ranks_from_scores,
    sum_normalize_column, topsis, vector_normalize_column, vikor, Better, DecisionProblem,
    Direction, NormalizationScheme, RankVector, Variant,
};
use proptest::prelude::*;

fn column(len: impl Into<proptest::sample::SizeRange>) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(2.0f64..99.0, len)
}

fn direction() -> impl Strategy<Value = Direction> {
    prop_oneof![Just(Direction::Benefit), Just(Direction::Cost)]
}

fn scheme() -> impl Strategy<Value = NormalizationScheme> {
    prop::sample::select(NormalizationScheme::ALL.to_vec())
}

fn weights(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.05f64..1.0, n).prop_map(|raw| {
        let total: f64 = raw.iter().sum();
        raw.iter().map(|w| w / total).collect()
    })
}

/// Random problem with `m` alternatives and `n` criteria.
fn problems(
    m: std::ops::RangeInclusive<usize>,
    n: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = DecisionProblem> {
    (m, n).prop_flat_map(|(m, n)| {
        (
            prop::collection::vec(column(n), m),
            weights(n),
            prop::collection::vec(direction(), n),
        )
            .prop_map(|(x, w, d)| problem(x, &w, &d))
    })
}

fn is_sorted_like(scores: &[f64], ranks: &RankVector, better: Better) -> bool {
    (0..scores.len()).all(|i| {
        (0..scores.len()).all(|j| {
            let ahead = match better {
                Better::Higher => scores[i] > scores[j] + 1e-9,
                Better::Lower => scores[i] < scores[j] - 1e-9,
            };
            !ahead || ranks.ranks[i] < ranks.ranks[j]
        })
    })
}

proptest! {
    #[test]
    fn ranks_follow_scores(scores in prop::collection::vec(-1e3f64..1e3, 1..12)) {
        let r = ranks_from_scores(&scores, Better::Higher).unwrap();
        prop_assert!(is_sorted_like(&scores, &r, Better::Higher));
        prop_assert!(r.ranks.iter().all(|&k| k >= 1 && k <= scores.len()));
        prop_assert!(r.ranks.contains(&1));
    }

    #[test]
    fn ranks_invariant_under_monotone_transform(scores in prop::collection::vec(1.0f64..50.0, 1..12)) {
        let a = ranks_from_scores(&scores, Better::Higher).unwrap();
        let stretched: Vec<f64> = scores.iter().map(|s| s * s * s + s).collect();
        let b = ranks_from_scores(&stretched, Better::Higher).unwrap();
        let neg: Vec<f64> = scores.iter().map(|s| -s).collect();
        let c = ranks_from_scores(&neg, Better::Lower).unwrap();
        prop_assert_eq!(&a.ranks, &b.ranks);
        prop_assert_eq!(&a.ranks, &c.ranks);
    }

    #[test]
    fn ranks_of_ranks_are_idempotent(scores in prop::collection::vec(0u8..6, 1..12)) {
        let scores: Vec<f64> = scores.into_iter().map(f64::from).collect();
        let r = ranks_from_scores(&scores, Better::Lower).unwrap();
        let again: Vec<f64> = r.ranks.iter().map(|&k| k as f64).collect();
        let r2 = ranks_from_scores(&again, Better::Lower).unwrap();
        prop_assert_eq!(r.ranks, r2.ranks);
    }

    #[test]
    fn log_columns_sum_to_one(col in column(2..20)) {
        let f = log_normalize_column(&col).unwrap();
        prop_assert!((f.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        prop_assert!(f.iter().all(|v| *v > 0.0 && *v < 1.0));
    }

    #[test]
    fn vector_columns_have_unit_norm(col in column(1..20)) {
        let r = vector_normalize_column(&col).unwrap();
        prop_assert!((r.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sum_columns_sum_to_one(col in column(1..20)) {
        let r = sum_normalize_column(&col).unwrap();
        prop_assert!((r.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn minmax_spans_unit_interval(col in column(2..20), dir in direction()) {
        prop_assume!(col.iter().any(|v| *v != col[0]));
        let r = minmax_normalize_column(&col, dir).unwrap();
        prop_assert!(r.iter().all(|v| (0.0..=1.0).contains(v)));
        let best = col.iter().copied().fold(f64::NAN, match dir {
            Direction::Benefit => f64::max,
            Direction::Cost => f64::min,
        });
        let i = col.iter().position(|v| *v == best).unwrap();
        prop_assert_eq!(r[i], 1.0);
    }

    #[test]
    fn normalization_preserves_order(col in column(2..15)) {
        for r in [
            log_normalize_column(&col).unwrap(),
            vector_normalize_column(&col).unwrap(),
            sum_normalize_column(&col).unwrap(),
        ] {
            for i in 0..col.len() {
                for j in 0..col.len() {
                    if col[i] < col[j] {
                        prop_assert!(r[i] < r[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn vector_and_sum_are_scale_invariant(col in column(1..15), k in 0.01f64..100.0) {
        let scaled: Vec<f64> = col.iter().map(|v| v * k).collect();
        let a = vector_normalize_column(&col).unwrap();
        let b = vector_normalize_column(&scaled).unwrap();
        prop_assert!(max_abs_diff(&a, &b) < 1e-12);
        let a = sum_normalize_column(&col).unwrap();
        let b = sum_normalize_column(&scaled).unwrap();
        prop_assert!(max_abs_diff(&a, &b) < 1e-12);
    }

    #[test]
    fn log_is_not_scale_invariant(col in column(2..10).prop_filter("spread", |c| {
        let lo = c.iter().copied().fold(f64::MAX, f64::min);
        let hi = c.iter().copied().fold(f64::MIN, f64::max);
        hi / lo > 1.1
    })) {
        let scaled: Vec<f64> = col.iter().map(|v| v * 10.0).collect();
        let a = log_normalize_column(&col).unwrap();
        let b = log_normalize_column(&scaled).unwrap();
        prop_assert!(max_abs_diff(&a, &b) > 1e-6);
    }

    #[test]
    fn normalize_matches_direct_formulas(p in problems(3..=3, 3..=3), s in scheme()) {
        let x = p.values().to_vec();
        let engine = normalize(&p, s);
        match oracle::normalize(&x, &p.directions(), s) {
            Some(expected) => {
                let got = engine.unwrap();
                for (a, b) in got.values.iter().zip(&expected) {
                    prop_assert!(max_abs_diff(a, b) < 1e-12);
                }
            }
            None => prop_assert!(engine.is_err()),
        }
    }

    #[test]
    fn engines_match_oracle(p in problems(2..=7, 1..=5), s in scheme(), v in 0.0f64..=1.0) {
        let x = p.values().to_vec();
        let (w, d) = (p.weights(), p.directions());
        if let Some(o) = oracle::topsis(&x, &w, &d, s) {
            let t = topsis(&p, s).unwrap();
            prop_assert!(max_abs_diff(&t.closeness, &o.cc) < 1e-9);
        }
        if let Some(o) = oracle::vikor(&x, &w, &d, s, v) {
            let out = vikor(&p, s, v).unwrap();
            prop_assert!(max_abs_diff(&out.s, &o.s) < 1e-9);
            prop_assert!(max_abs_diff(&out.r, &o.r) < 1e-9);
            prop_assert!(max_abs_diff(&out.q, &o.q) < 1e-9);
        }
    }

    #[test]
    fn topsis_is_permutation_equivariant(p in problems(3..=7, 2..=5), s in scheme(), seed in any::<u64>()) {
        let m = p.n_alternatives();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.rotate_left((seed % m as u64) as usize);
        perm.swap(0, m - 1);
        let shuffled = p.select_alternatives(&perm).unwrap();
        if let (Ok(a), Ok(b)) = (topsis(&p, s), topsis(&shuffled, s)) {
            for (k, &i) in perm.iter().enumerate() {
                prop_assert!((a.closeness[i] - b.closeness[k]).abs() < 1e-12);
            }
        }
        if let (Ok(a), Ok(b)) = (vikor(&p, s, 0.5), vikor(&shuffled, s, 0.5)) {
            for (k, &i) in perm.iter().enumerate() {
                prop_assert!((a.q[i] - b.q[k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn winners_hold_the_extreme_score(p in problems(2..=8, 1..=5), s in scheme()) {
        if let Ok(t) = topsis(&p, s) {
            let best = t.closeness.iter().copied().fold(f64::MIN, f64::max);
            let top = t.ranking.order()[0];
            prop_assert!((t.closeness[top] - best).abs() < 1e-9);
            prop_assert!(t.closeness.iter().all(|c| (0.0..=1.0).contains(c)));
        }
        if let Ok(v) = vikor(&p, s, 0.5) {
            let best = v.q.iter().copied().fold(f64::MAX, f64::min);
            let top = v.ranking.order()[0];
            prop_assert!((v.q[top] - best).abs() < 1e-9);
        }
    }

    #[test]
    fn vikor_indices_are_bounded(p in problems(2..=8, 1..=6), s in scheme(), v in 0.0f64..=1.0) {
        if let Ok(out) = vikor(&p, s, v) {
            let wmax = p.weights().into_iter().fold(0.0, f64::max);
            prop_assert!(out.s.iter().all(|x| (-1e-12..=1.0 + 1e-12).contains(x)));
            prop_assert!(out.r.iter().all(|x| *x >= 0.0 && *x <= wmax + 1e-12));
            prop_assert!(out.q.iter().all(|x| (-1e-12..=1.0 + 1e-12).contains(x)));
        }
    }

    #[test]
    fn vikor_extreme_strategy_weights(p in problems(2..=8, 1..=5), s in scheme()) {
        if let Ok(out) = vikor(&p, s, 1.0) {
            let by_s = ranks_from_scores(&out.s, Better::Lower).unwrap();
            prop_assert!(is_sorted_like(&out.s, &out.ranking, Better::Lower));
            prop_assert!(is_sorted_like(&out.q, &by_s, Better::Lower));
        }
        if let Ok(out) = vikor(&p, s, 0.0) {
            let by_r = ranks_from_scores(&out.r, Better::Lower).unwrap();
            prop_assert!(is_sorted_like(&out.r, &out.ranking, Better::Lower));
            prop_assert!(is_sorted_like(&out.q, &by_r, Better::Lower));
        }
    }

    #[test]
    fn spearman_is_symmetric_and_bounded(
        a in prop::collection::vec(0u8..5, 2..10),
        seed in any::<u64>(),
    ) {
        let m = a.len();
        let b: Vec<f64> = (0..m).map(|i| ((seed >> (i % 64)) & 7) as f64).collect();
        let ra = ranks_from_scores(&a.iter().map(|&v| f64::from(v)).collect::<Vec<_>>(), Better::Higher).unwrap();
        let rb = ranks_from_scores(&b, Better::Higher).unwrap();
        match (spearman(&ra, &rb), spearman(&rb, &ra)) {
            (Ok(x), Ok(y)) => {
                prop_assert!((x - y).abs() < 1e-12);
                prop_assert!((-1.0..=1.0).contains(&x));
            }
            (x, y) => prop_assert_eq!(x.is_err(), y.is_err()),
        }
    }

    #[test]
    fn spearman_ignores_relabeling(scores in prop::collection::vec(0.0f64..10.0, 3..10), other in prop::collection::vec(0.0f64..10.0, 3..10)) {
        let m = scores.len().min(other.len());
        let (a, b) = (&scores[..m], &other[..m]);
        let rho = |a: &[f64], b: &[f64]| {
            spearman(
                &ranks_from_scores(a, Better::Higher).unwrap(),
                &ranks_from_scores(b, Better::Higher).unwrap(),
            )
        };
        let rev = |v: &[f64]| v.iter().rev().copied().collect::<Vec<_>>();
        match (rho(a, b), rho(&rev(a), &rev(b))) {
            (Ok(x), Ok(y)) => prop_assert!((x - y).abs() < 1e-12),
            (x, y) => prop_assert_eq!(x.is_err(), y.is_err()),
        }
        if let Ok(x) = rho(a, a) {
            prop_assert!((x - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn scenario_weights_are_valid(w in (2usize..7).prop_flat_map(weights), count in 2usize..30) {
        let scenarios = weight_scenarios(&w, count).unwrap();
        prop_assert_eq!(scenarios.len(), count);
        let s = w
            .iter()
            .enumerate()
            .fold(0, |best, (j, &x)| if x > w[best] { j } else { best });
        for sc in &scenarios {
            prop_assert!((sc.weights.iter().sum::<f64>() - 1.0).abs() < 1e-9);
            prop_assert!(sc.weights.iter().all(|x| *x >= 0.0));
        }
        prop_assert!(scenarios[0].weights[s].abs() < 1e-12);
        prop_assert!((scenarios[count - 1].weights[s] - 1.0).abs() < 1e-12);
        prop_assert_eq!(weight_scenarios(&w, count).unwrap(), scenarios);
    }

    #[test]
    fn dynamic_runs_down_to_two(p in problems(3..=8, 2..=4)) {
        let report = dynamic_suite(&p, &Variant::standard_four()).unwrap();
        for t in &report.trajectories {
            if t.completed {
                prop_assert_eq!(t.stages.len(), p.n_alternatives() - 1);
                prop_assert_eq!(t.stages.last().unwrap().surviving.len(), 2);
            }
        }
    }

    #[test]
    fn baseline_scenario_correlates_perfectly(p in problems(3..=8, 2..=5)) {
        let base = WeightScenario { index: 1, delta_x: 0.0, weights: p.weights() };
        let variants = Variant::standard_four();
        let report = sensitivity_suite_with_scenarios(&p, &variants, vec![base]).unwrap();
        for v in 0..variants.len() {
            if let (Some(b), Some(r)) = (report.baselines[v].value(), report.rankings[v][0].value()) {
                prop_assert_eq!(b, r);
                if let Some(rho) = report.scc_vs_base[v][0].value() {
                    prop_assert!((rho - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn stages_shrink_by_one(p in problems(3..=8, 2..=4)) {
        let report = dynamic_suite(&p, &Variant::standard_four()).unwrap();
        for t in &report.trajectories {
            for pair in t.stages.windows(2) {
                prop_assert_eq!(pair[1].surviving.len() + 1, pair[0].surviving.len());
                let removed = pair[0].removed.unwrap();
                prop_assert!(!pair[1].surviving.contains(&removed));
            }
        }
    }
}
