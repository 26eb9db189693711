//! Exact solvers for small instances, used as ground truth when checking
//! the greedy algorithm's approximation factor.

mod assignment;
mod ratio;
mod setcover;

use std::time::Duration;

pub use assignment::exact_by_assignment;
pub use ratio::{ratio as ratio_of, ratio_report, solve_exact, RatioReport};
pub use setcover::exact_cmv_setcover;

use crate::objectives::Objective;
use crate::partition::Partition;

pub const DEFAULT_NODE_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactConfig {
    /// Largest number of complete resolution assignments the exhaustive
    /// search may enumerate.
    pub node_limit: u64,
    /// Wall-clock budget for the set-cover branch and bound.
    pub timeout: Option<Duration>,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            node_limit: DEFAULT_NODE_LIMIT,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub objective: Objective,
    pub optimum: u64,
    pub witness: Partition,
    /// Leaves enumerated (assignment search) or nodes expanded (set cover).
    pub explored: u64,
}
