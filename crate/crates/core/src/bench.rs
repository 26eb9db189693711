//! Benchmark suites driven by `fpclust bench`.
//!
//! The ratio suite compares greedy against the exact oracles on a seeded
//! corpus of small random instances. The scale suite times greedy on large
//! random instances against a fixed budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exact::{solve_exact, ExactConfig};
use crate::fingerprint::Instance;
use crate::gen::gen_random;
use crate::greedy::greedy_cluster;
use crate::io::{InstanceMeta, RunReport};
use crate::objectives::{evaluate, Evaluation, Objective};

/// Worst acceptable ratio for the pair objectives.
pub const RATIO_BOUND: f64 = 2.0;

/// Per-instance greedy budget for the scale suite.
pub const SCALE_BUDGET: Duration = Duration::from_secs(10);
pub const SCALE_DEFAULT_N: usize = 10_000;
pub const SCALE_LENGTH: usize = 64;
pub const SCALE_P: usize = 2;

/// Largest fingerprint length in the ratio corpus.
pub const CORPUS_MAX_LENGTH: usize = 12;
/// Largest number of `N`s per fingerprint in the ratio corpus.
pub const CORPUS_MAX_P: usize = 2;

/// Instance `seed` of the ratio corpus. Short fingerprints, several
/// centers and a high missing rate make overlapping compatibilities (and so
/// suboptimal greedy picks) common; every 8th instance uses the full length
/// range up to 12.
pub fn corpus_instance(seed: u64, max_n: usize) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = rng.random_range(1..=max_n.max(1));
    let l = if seed % 8 == 7 {
        rng.random_range(2..=CORPUS_MAX_LENGTH)
    } else {
        rng.random_range(2..=5)
    };
    let p = rng.random_range(1..=CORPUS_MAX_P).min(l);
    let centers = rng.random_range(1..=n.max(2));
    let rate = rng.random_range(0.4..1.0);
    gen_random(n, l, p, centers, rate, seed)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub objective: Objective,
    pub instances: usize,
    pub min_ratio: f64,
    pub mean_ratio: f64,
    pub max_ratio: f64,
    /// Instances whose ratio exceeds [`RATIO_BOUND`]; only counted for the
    /// pair objectives.
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub suite: String,
    pub aggregates: Vec<Aggregate>,
}

impl Summary {
    pub fn violations(&self) -> usize {
        self.aggregates.iter().map(|a| a.violations).sum()
    }
}

fn echo(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn aggregate(objective: Objective, rows: &[RunReport]) -> Aggregate {
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| r.objective == objective)
        .filter_map(|r| r.ratio)
        .collect();
    let count = ratios.len();
    let bounded = objective != Objective::Cmv;
    Aggregate {
        objective,
        instances: count,
        min_ratio: ratios.iter().copied().fold(f64::INFINITY, f64::min),
        mean_ratio: ratios.iter().sum::<f64>() / count.max(1) as f64,
        max_ratio: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        violations: if bounded {
            ratios.iter().filter(|&&r| r > RATIO_BOUND).count()
        } else {
            0
        },
    }
}

/// Greedy against the exact optimum for every objective on corpus
/// instances `0..seeds`.
pub fn ratio_suite(seeds: u64, max_n: usize, config: &ExactConfig) -> Result<(Vec<RunReport>, Summary)> {
    let mut rows = Vec::new();
    for seed in 0..seeds {
        let inst = corpus_instance(seed, max_n)?;
        let start = Instant::now();
        let (part, _) = greedy_cluster(&inst);
        let greedy_ms = start.elapsed().as_secs_f64() * 1e3;
        let eval = evaluate(&inst, &part)?;
        for objective in Objective::ALL {
            let start = Instant::now();
            let optimum = solve_exact(&inst, objective, config)?.optimum;
            let exact_ms = start.elapsed().as_secs_f64() * 1e3;
            let greedy = eval.value(objective);
            rows.push(RunReport {
                instance: InstanceMeta::from(&inst),
                algorithm: "greedy".into(),
                objective,
                value: greedy,
                optimum: Some(optimum),
                ratio: Some(crate::exact::ratio_of(objective, greedy, optimum)),
                wall_time_ms: greedy_ms + exact_ms,
                config: echo(&[
                    ("suite", "ratio".into()),
                    ("seed", seed.to_string()),
                    ("max_n", max_n.to_string()),
                ]),
            });
        }
    }
    let summary = Summary {
        suite: "ratio".into(),
        aggregates: Objective::ALL.iter().map(|&o| aggregate(o, &rows)).collect(),
    };
    Ok((rows, summary))
}

/// Result of one scale-suite run.
#[derive(Debug, Clone)]
pub struct ScaleRow {
    pub report: RunReport,
    pub evaluation: Evaluation,
    pub elapsed: Duration,
}

/// Greedy on `gen_random(n, 64, 2, ...)` for seeds `0..seeds`.
pub fn scale_suite(seeds: u64, n: usize) -> Result<Vec<ScaleRow>> {
    let centers = (n / 20).max(1);
    let rate = 0.05;
    let mut rows = Vec::new();
    for seed in 0..seeds {
        let inst = gen_random(n, SCALE_LENGTH, SCALE_P, centers, rate, seed)?;
        let start = Instant::now();
        let (part, _) = greedy_cluster(&inst);
        let elapsed = start.elapsed();
        let evaluation = evaluate(&inst, &part)?;
        rows.push(ScaleRow {
            report: RunReport {
                instance: InstanceMeta::from(&inst),
                algorithm: "greedy".into(),
                objective: Objective::Iecmv,
                value: evaluation.iecmv,
                optimum: None,
                ratio: None,
                wall_time_ms: elapsed.as_secs_f64() * 1e3,
                config: echo(&[
                    ("suite", "scale".into()),
                    ("seed", seed.to_string()),
                    ("centers", centers.to_string()),
                    ("missing_rate", rate.to_string()),
                    ("budget_ms", SCALE_BUDGET.as_millis().to_string()),
                ]),
            },
            evaluation,
            elapsed,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_respects_limits() {
        for seed in 0..50 {
            let inst = corpus_instance(seed, 7).unwrap();
            assert!((1..=7).contains(&inst.size()));
            assert!(inst.length() <= CORPUS_MAX_LENGTH);
            assert!(inst.p() <= CORPUS_MAX_P);
        }
    }

    #[test]
    fn small_ratio_suite() {
        let (rows, summary) = ratio_suite(10, 5, &ExactConfig::default()).unwrap();
        assert_eq!(rows.len(), 30);
        assert_eq!(summary.violations(), 0);
        for a in &summary.aggregates {
            assert!(a.min_ratio >= 1.0, "{a:?}");
        }
    }

    #[test]
    fn small_scale_suite() {
        let rows = scale_suite(1, 500).unwrap();
        assert_eq!(rows.len(), 1);
        let e = rows[0].evaluation;
        assert_eq!(e.iecmv + e.oecmv, e.total_compatible_pairs);
    }
}
