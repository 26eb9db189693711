//! Minimum cluster count as a minimum set cover over candidate resolutions.
//!
//! A cluster is valid exactly when its members share a resolution, so the
//! fewest clusters equals the fewest candidate sets `s(r)` covering every
//! index. The branch and bound starts from the greedy solution as its
//! incumbent, drops candidate sets contained in another set, always branches
//! on the uncovered element with the fewest remaining sets, and excludes
//! each tried set from its later siblings.

use std::time::{Duration, Instant};

use crate::candidates::{candidate_resolutions, member_candidates, Candidate};
use crate::error::{Error, Result};
use crate::fingerprint::Instance;
use crate::greedy::greedy_cluster;
use crate::objectives::Objective;
use crate::partition::{Cluster, Partition};

use super::OracleResult;

fn bitset(n: usize, members: &[usize]) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &m in members {
        b[m / 64] |= 1 << (m % 64);
    }
    b
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Indices of candidates not strictly dominated by another candidate. Among
/// sets with identical members the earliest survives.
fn undominated(n: usize, candidates: &[Candidate], by_member: &[Vec<usize>]) -> Vec<usize> {
    let bits: Vec<Vec<u64>> = candidates.iter().map(|c| bitset(n, &c.members)).collect();
    (0..candidates.len())
        .filter(|&s| {
            let first = candidates[s].members[0];
            !by_member[first].iter().any(|&t| {
                t != s
                    && is_subset(&bits[s], &bits[t])
                    && (candidates[t].degree() > candidates[s].degree() || t < s)
            })
        })
        .collect()
}

struct Bnb {
    sets: Vec<Vec<u64>>,
    /// Reduced-set index back to the candidate index.
    origin: Vec<usize>,
    elem_sets: Vec<Vec<usize>>,
    covered: Vec<u64>,
    uncovered: usize,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
    best: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Bnb {
    fn is_covered(&self, e: usize) -> bool {
        self.covered[e / 64] & (1 << (e % 64)) != 0
    }

    fn gain(&self, s: usize) -> usize {
        self.sets[s]
            .iter()
            .zip(&self.covered)
            .map(|(a, c)| (a & !c).count_ones() as usize)
            .sum()
    }

    /// Lower bound on the sets still needed; `None` if some uncovered
    /// element has no admissible set left.
    fn bound(&self, gains: &[usize]) -> Option<(usize, usize)> {
        let mut branch = None::<(usize, usize)>;
        let mut fractional = 0.0f64;
        let mut order = Vec::new();
        for e in 0..self.elem_sets.len() {
            if self.is_covered(e) {
                continue;
            }
            let mut count = 0;
            let mut max_gain = 0;
            for &s in &self.elem_sets[e] {
                if !self.excluded[s] {
                    count += 1;
                    max_gain = max_gain.max(gains[s]);
                }
            }
            if count == 0 {
                return None;
            }
            // Each set holds at most `max_gain` uncovered elements, so
            // weights 1/max_gain form a feasible dual.
            fractional += 1.0 / max_gain as f64;
            order.push((count, e));
            if branch.is_none_or(|(c, _)| count < c) {
                branch = Some((count, e));
            }
        }
        // Elements that pairwise share no admissible set each need their own.
        order.sort_unstable();
        let mut used = vec![false; self.sets.len()];
        let mut packing = 0;
        for &(_, e) in &order {
            let free = self.elem_sets[e]
                .iter()
                .all(|&s| self.excluded[s] || !used[s]);
            if free {
                packing += 1;
                for &s in &self.elem_sets[e] {
                    used[s] = true;
                }
            }
        }
        let fractional = (fractional - 1e-9).ceil().max(0.0) as usize;
        Some((packing.max(fractional), branch.map_or(0, |(_, e)| e)))
    }

    fn search(&mut self) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        if self.uncovered == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.iter().map(|&s| self.origin[s]).collect();
            }
            return;
        }
        let gains: Vec<usize> = (0..self.sets.len())
            .map(|s| if self.excluded[s] { 0 } else { self.gain(s) })
            .collect();
        let Some((lower, element)) = self.bound(&gains) else {
            return;
        };
        if self.chosen.len() + lower >= self.best.len() {
            return;
        }

        let mut branches: Vec<usize> = self.elem_sets[element]
            .iter()
            .copied()
            .filter(|&s| !self.excluded[s])
            .collect();
        branches.sort_by_key(|&s| (std::cmp::Reverse(gains[s]), s));

        let mut newly_excluded = Vec::new();
        for s in branches {
            let saved = self.covered.clone();
            for (c, a) in self.covered.iter_mut().zip(&self.sets[s]) {
                *c |= a;
            }
            self.uncovered -= gains[s];
            self.chosen.push(s);
            self.search();
            self.chosen.pop();
            self.uncovered += gains[s];
            self.covered = saved;
            if self.timed_out {
                break;
            }
            self.excluded[s] = true;
            newly_excluded.push(s);
        }
        for s in newly_excluded {
            self.excluded[s] = false;
        }
    }
}

/// Minimum number of clusters, solved exactly as a set cover.
///
/// The cover is turned into a partition by assigning each index to the
/// first chosen set, in lexicographic order of resolutions, that contains
/// it. Fails with [`Error::Timeout`] (carrying the incumbent and the root
/// lower bound) when `timeout` elapses first.
pub fn exact_cmv_setcover(inst: &Instance, timeout: Option<Duration>) -> Result<OracleResult> {
    let n = inst.size();
    let candidates = candidate_resolutions(inst);
    let by_member = member_candidates(n, &candidates);
    let origin = undominated(n, &candidates, &by_member);

    let mut elem_sets = vec![Vec::new(); n];
    let sets: Vec<Vec<u64>> = origin
        .iter()
        .enumerate()
        .map(|(s, &c)| {
            for &m in &candidates[c].members {
                elem_sets[m].push(s);
            }
            bitset(n, &candidates[c].members)
        })
        .collect();

    let (greedy, _) = greedy_cluster(inst);
    let incumbent: Vec<usize> = greedy
        .clusters()
        .iter()
        .map(|c| {
            candidates
                .binary_search_by(|cand| cand.resolution.cmp(&c.witness))
                .expect("greedy witnesses are candidates")
        })
        .collect();

    let mut bnb = Bnb {
        excluded: vec![false; sets.len()],
        sets,
        origin,
        elem_sets,
        covered: vec![0; n.div_ceil(64)],
        uncovered: n,
        chosen: Vec::new(),
        best: incumbent,
        nodes: 0,
        deadline: timeout.map(|t| Instant::now() + t),
        timed_out: false,
    };
    let root_gains: Vec<usize> = (0..bnb.sets.len()).map(|s| bnb.gain(s)).collect();
    let root_lower = bnb.bound(&root_gains).map_or(0, |(lb, _)| lb);
    bnb.search();
    if bnb.timed_out {
        return Err(Error::Timeout {
            seconds: timeout.unwrap_or_default().as_secs_f64(),
            upper: bnb.best.len(),
            lower: root_lower,
        });
    }

    let mut chosen = bnb.best;
    chosen.sort_unstable();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); chosen.len()];
    for i in 0..n {
        let k = chosen
            .iter()
            .position(|&c| candidates[c].members.binary_search(&i).is_ok())
            .expect("chosen sets cover every index");
        groups[k].push(i);
    }
    let clusters: Vec<Cluster> = groups
        .into_iter()
        .zip(&chosen)
        .filter(|(m, _)| !m.is_empty())
        .map(|(members, &c)| Cluster {
            members,
            witness: candidates[c].resolution.clone(),
        })
        .collect();

    Ok(OracleResult {
        objective: Objective::Cmv,
        optimum: clusters.len() as u64,
        witness: Partition::new(clusters),
        explored: bnb.nodes,
    })
}
