use serde::Serialize;

use crate::error::Result;
use crate::fingerprint::Instance;
use crate::greedy::greedy_cluster;
use crate::objectives::{evaluate, Objective};

use super::{exact_by_assignment, exact_cmv_setcover, ExactConfig, OracleResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioReport {
    pub objective: Objective,
    pub greedy: u64,
    pub optimum: u64,
    /// Always at least 1 for a correct oracle: `optimum / greedy` when
    /// maximizing, `greedy / optimum` when minimizing, `0 / 0 = 1`.
    pub ratio: f64,
}

pub fn ratio(objective: Objective, greedy: u64, optimum: u64) -> f64 {
    let (num, den) = if objective.maximize() {
        (optimum, greedy)
    } else {
        (greedy, optimum)
    };
    match (num, den) {
        (0, 0) => 1.0,
        (_, 0) => f64::INFINITY,
        (a, b) => a as f64 / b as f64,
    }
}

/// Runs the exact oracle for `objective`: set cover for the cluster count,
/// assignment enumeration for the pair objectives.
pub fn solve_exact(inst: &Instance, objective: Objective, config: &ExactConfig) -> Result<OracleResult> {
    match objective {
        Objective::Cmv => exact_cmv_setcover(inst, config.timeout),
        _ => exact_by_assignment(inst, objective, config.node_limit),
    }
}

/// Greedy value against the exact optimum for one objective.
pub fn ratio_report(inst: &Instance, objective: Objective, config: &ExactConfig) -> Result<RatioReport> {
    let (part, _) = greedy_cluster(inst);
    let greedy = evaluate(inst, &part)?.value(objective);
    let optimum = solve_exact(inst, objective, config)?.optimum;
    Ok(RatioReport {
        objective,
        greedy,
        optimum,
        ratio: ratio(objective, greedy, optimum),
    })
}
