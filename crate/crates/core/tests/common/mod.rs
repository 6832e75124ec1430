//! Shared fixtures: printed reference tables and an independent, literal
//! transcription of the ranking formulas used as an oracle.

#![allow(dead_code, clippy::needless_range_loop)]

use madm_core::{Criterion, DecisionProblem, Direction};
use rand::Rng;

pub const SMALL_WEIGHTS: [f64; 5] = [0.197, 0.163, 0.176, 0.197, 0.267];
pub const LARGE_WEIGHTS: [f64; 6] = [0.12, 0.2, 0.16, 0.32, 0.15, 0.05];

pub const SMALL_MATRIX: [[f64; 5]; 4] = [
    [8.0, 7.0, 7.0, 9.0, 8.0],
    [7.0, 9.0, 8.0, 7.0, 8.0],
    [8.0, 8.0, 8.0, 6.0, 9.0],
    [9.0, 6.0, 7.0, 8.0, 7.0],
];

pub const LARGE_MATRIX: [[f64; 6]; 8] = [
    [4.0, 8.0, 8.0, 7.0, 9.0, 8.0],
    [6.0, 7.0, 7.0, 8.0, 9.0, 6.0],
    [7.0, 6.0, 5.0, 8.0, 7.0, 4.0],
    [6.0, 6.0, 4.0, 6.0, 5.0, 4.0],
    [9.0, 9.0, 4.0, 6.0, 6.0, 7.0],
    [7.0, 9.0, 8.0, 8.0, 7.0, 8.0],
    [8.0, 8.0, 9.0, 8.0, 6.0, 9.0],
    [9.0, 4.0, 7.0, 5.0, 8.0, 6.0],
];

pub const LARGE_DIRECTIONS: [Direction; 6] = [
    Direction::Benefit,
    Direction::Benefit,
    Direction::Cost,
    Direction::Cost,
    Direction::Benefit,
    Direction::Benefit,
];

/// Printed logarithmic block of the small problem's VIKOR table.
pub const SMALL_LOG_TABLE: [[f64; 5]; 4] = [
    [0.250, 0.243, 0.242, 0.274, 0.250],
    [0.235, 0.274, 0.258, 0.243, 0.250],
    [0.250, 0.259, 0.258, 0.224, 0.265],
    [0.265, 0.224, 0.242, 0.259, 0.235],
];

/// Printed vector-normalized block of the small problem's VIKOR table.
pub const SMALL_VECTOR_TABLE: [[f64; 5]; 4] = [
    [0.498, 0.461, 0.465, 0.593, 0.498],
    [0.435, 0.593, 0.532, 0.461, 0.498],
    [0.498, 0.527, 0.532, 0.395, 0.560],
    [0.560, 0.395, 0.465, 0.527, 0.435],
];

/// Printed logarithmic block of the large problem's VIKOR table.
pub const LARGE_LOG_TABLE: [[f64; 6]; 8] = [
    [0.0904, 0.1344, 0.1421, 0.1259, 0.1412, 0.1419],
    [0.1168, 0.1258, 0.1330, 0.1345, 0.1412, 0.1222],
    [0.1269, 0.1158, 0.1100, 0.1345, 0.1251, 0.0946],
    [0.1168, 0.1158, 0.0948, 0.1159, 0.1034, 0.0946],
    [0.1433, 0.1420, 0.0948, 0.1159, 0.1152, 0.1328],
    [0.1269, 0.1420, 0.1421, 0.1345, 0.1251, 0.1419],
    [0.1356, 0.1344, 0.1502, 0.1345, 0.1152, 0.1499],
    [0.1433, 0.0896, 0.1330, 0.1041, 0.1337, 0.1222],
];

/// Printed vector-normalized block of the large problem's VIKOR table.
pub const LARGE_VECTOR_TABLE: [[f64; 6]; 8] = [
    [0.1971, 0.3871, 0.4193, 0.3491, 0.4386, 0.4205],
    [0.2956, 0.3388, 0.3669, 0.3990, 0.4386, 0.3154],
    [0.3449, 0.2904, 0.2621, 0.3990, 0.3412, 0.2102],
    [0.2956, 0.2904, 0.2097, 0.2993, 0.2437, 0.2102],
    [0.4434, 0.4355, 0.2097, 0.2993, 0.2924, 0.3679],
    [0.3449, 0.4355, 0.4193, 0.3990, 0.3412, 0.4205],
    [0.3941, 0.3871, 0.4717, 0.3990, 0.2924, 0.4730],
    [0.4434, 0.1936, 0.3669, 0.2494, 0.3899, 0.3154],
];

pub fn rows<const N: usize>(m: &[[f64; N]]) -> Vec<Vec<f64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn problem(
    values: Vec<Vec<f64>>,
    weights: &[f64],
    directions: &[Direction],
) -> DecisionProblem {
    let criteria = weights
        .iter()
        .zip(directions)
        .enumerate()
        .map(|(j, (&w, &d))| Criterion::new(format!("C{}", j + 1), d, w))
        .collect();
    let alternatives = (1..=values.len()).map(|i| format!("A{i}")).collect();
    DecisionProblem::new(criteria, alternatives, values).unwrap()
}

/// Random valid problem: entries uniform in [2, 99], random weights and directions.
pub fn random_problem<R: Rng>(rng: &mut R, m: usize, n: usize) -> DecisionProblem {
    let values = (0..m)
        .map(|_| (0..n).map(|_| rng.gen_range(2.0..=99.0)).collect())
        .collect();
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    let directions: Vec<Direction> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Direction::Benefit
            } else {
                Direction::Cost
            }
        })
        .collect();
    problem(values, &weights, &directions)
}

/// Literal per-entry evaluation of each normalization formula.
pub mod oracle {
    use madm_core::{Direction, NormalizationScheme};

    pub fn normalize(
        x: &[Vec<f64>],
        dirs: &[Direction],
        scheme: NormalizationScheme,
    ) -> Option<Vec<Vec<f64>>> {
        let m = x.len();
        let n = x[0].len();
        let mut out = vec![vec![0.0; n]; m];
        for j in 0..n {
            let mut product = 1.0;
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            let mut max = f64::MIN;
            let mut min = f64::MAX;
            for row in x {
                product *= row[j];
                sum += row[j];
                sum_sq += row[j] * row[j];
                max = max.max(row[j]);
                min = min.min(row[j]);
            }
            for i in 0..m {
                out[i][j] = match scheme {
                    NormalizationScheme::Logarithmic => {
                        if product.ln() == 0.0 {
                            return None;
                        }
                        x[i][j].ln() / product.ln()
                    }
                    NormalizationScheme::Vector => x[i][j] / sum_sq.sqrt(),
                    NormalizationScheme::Sum => x[i][j] / sum,
                    NormalizationScheme::MinMax => {
                        if max == min {
                            return None;
                        }
                        match dirs[j] {
                            Direction::Benefit => (x[i][j] - min) / (max - min),
                            Direction::Cost => (max - x[i][j]) / (max - min),
                        }
                    }
                };
            }
        }
        Some(out)
    }

    fn higher_is_better(dir: Direction, scheme: NormalizationScheme) -> bool {
        scheme == NormalizationScheme::MinMax || dir == Direction::Benefit
    }

    pub struct Topsis {
        pub d_plus: Vec<f64>,
        pub d_minus: Vec<f64>,
        pub cc: Vec<f64>,
    }

    pub fn topsis(
        x: &[Vec<f64>],
        w: &[f64],
        dirs: &[Direction],
        scheme: NormalizationScheme,
    ) -> Option<Topsis> {
        let r = normalize(x, dirs, scheme)?;
        let m = x.len();
        let n = w.len();
        let mut v = vec![vec![0.0; n]; m];
        for i in 0..m {
            for j in 0..n {
                v[i][j] = w[j] * r[i][j];
            }
        }
        let mut best = vec![0.0; n];
        let mut worst = vec![0.0; n];
        let mut all_equal = true;
        for j in 0..n {
            let col: Vec<f64> = (0..m).map(|i| v[i][j]).collect();
            let hi = col.iter().cloned().fold(f64::MIN, f64::max);
            let lo = col.iter().cloned().fold(f64::MAX, f64::min);
            if higher_is_better(dirs[j], scheme) {
                best[j] = hi;
                worst[j] = lo;
            } else {
                best[j] = lo;
                worst[j] = hi;
            }
            if hi != lo {
                all_equal = false;
            }
        }
        if all_equal {
            return None;
        }
        let mut out = Topsis {
            d_plus: vec![],
            d_minus: vec![],
            cc: vec![],
        };
        for i in 0..m {
            let mut p = 0.0;
            let mut q = 0.0;
            for j in 0..n {
                p += (v[i][j] - best[j]) * (v[i][j] - best[j]);
                q += (v[i][j] - worst[j]) * (v[i][j] - worst[j]);
            }
            out.d_plus.push(p.sqrt());
            out.d_minus.push(q.sqrt());
            out.cc.push(q.sqrt() / (p.sqrt() + q.sqrt()));
        }
        Some(out)
    }

    pub struct Vikor {
        pub s: Vec<f64>,
        pub r: Vec<f64>,
        pub q: Vec<f64>,
    }

    pub fn vikor(
        x: &[Vec<f64>],
        w: &[f64],
        dirs: &[Direction],
        scheme: NormalizationScheme,
        v: f64,
    ) -> Option<Vikor> {
        let f = normalize(x, dirs, scheme)?;
        let m = x.len();
        let n = w.len();
        let mut s = vec![0.0; m];
        let mut r = vec![0.0; m];
        for j in 0..n {
            let col: Vec<f64> = (0..m).map(|i| f[i][j]).collect();
            let hi = col.iter().cloned().fold(f64::MIN, f64::max);
            let lo = col.iter().cloned().fold(f64::MAX, f64::min);
            let (star, minus) = if higher_is_better(dirs[j], scheme) {
                (hi, lo)
            } else {
                (lo, hi)
            };
            if (star - minus).abs() < 1e-12 {
                continue;
            }
            for i in 0..m {
                let term = w[j] * (star - f[i][j]) / (star - minus);
                s[i] += term;
                if term > r[i] {
                    r[i] = term;
                }
            }
        }
        let s_star = s.iter().cloned().fold(f64::MAX, f64::min);
        let s_minus = s.iter().cloned().fold(f64::MIN, f64::max);
        let r_star = r.iter().cloned().fold(f64::MAX, f64::min);
        let r_minus = r.iter().cloned().fold(f64::MIN, f64::max);
        let q = (0..m)
            .map(|i| {
                let a = if s_minus - s_star < 1e-12 {
                    0.0
                } else {
                    (s[i] - s_star) / (s_minus - s_star)
                };
                let b = if r_minus - r_star < 1e-12 {
                    0.0
                } else {
                    (r[i] - r_star) / (r_minus - r_star)
                };
                v * a + (1.0 - v) * b
            })
            .collect();
        Some(Vikor { s, r, q })
    }
}
