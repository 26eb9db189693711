//! Exhaustive search over resolution assignments.
//!
//! Every valid cluster has a common resolution, so some optimal partition
//! (for any of the three objectives) is obtained by giving each fingerprint
//! one of its resolutions and grouping fingerprints that received the same
//! vector. Merging two clusters with equal resolutions never adds a cluster,
//! never loses an inside pair and never adds a split pair, so enumerating
//! assignments reaches the optimum.

use crate::candidates::{candidate_resolutions, member_candidates};
use crate::error::{Error, Result};
use crate::fingerprint::Instance;
use crate::objectives::{total_compatible_pairs, Objective};
use crate::partition::{Cluster, Partition};

use super::OracleResult;

struct Search<'a> {
    options: &'a [Vec<usize>],
    objective: Objective,
    total_pairs: u64,
    counts: Vec<u64>,
    choice: Vec<usize>,
    distinct: u64,
    pairs: u64,
    best: Option<(u64, Vec<usize>)>,
    explored: u64,
}

impl Search<'_> {
    fn score(&self) -> u64 {
        match self.objective {
            Objective::Cmv => self.distinct,
            Objective::Iecmv => self.pairs,
            Objective::Oecmv => self.total_pairs - self.pairs,
        }
    }

    fn improves(&self, value: u64) -> bool {
        match &self.best {
            None => true,
            Some((best, _)) if self.objective.maximize() => value > *best,
            Some((best, _)) => value < *best,
        }
    }

    fn run(&mut self, depth: usize) {
        if depth == self.options.len() {
            self.explored += 1;
            let value = self.score();
            if self.improves(value) {
                self.best = Some((value, self.choice.clone()));
            }
            return;
        }
        for k in 0..self.options[depth].len() {
            let c = self.options[depth][k];
            self.pairs += self.counts[c];
            if self.counts[c] == 0 {
                self.distinct += 1;
            }
            self.counts[c] += 1;
            self.choice[depth] = c;

            self.run(depth + 1);

            self.counts[c] -= 1;
            if self.counts[c] == 0 {
                self.distinct -= 1;
            }
            self.pairs -= self.counts[c];
        }
    }
}

/// Exact optimum of `objective` by enumerating every assignment of one
/// resolution per fingerprint. Fingerprints are assigned in index order and
/// resolutions tried in lexicographic order; the first optimum found is the
/// witness.
///
/// Fails with [`Error::NodeLimit`] when the number of assignments exceeds
/// `node_limit`.
pub fn exact_by_assignment(
    inst: &Instance,
    objective: Objective,
    node_limit: u64,
) -> Result<OracleResult> {
    let exponent: usize = inst.fingerprints().iter().map(|f| f.missing_count()).sum();
    let size = if exponent < 64 { Some(1u64 << exponent) } else { None };
    if size.is_none_or(|s| s > node_limit) {
        return Err(Error::NodeLimit {
            size: format!("2^{exponent}"),
            limit: node_limit,
        });
    }

    let candidates = candidate_resolutions(inst);
    let options = member_candidates(inst.size(), &candidates);
    let mut search = Search {
        options: &options,
        objective,
        total_pairs: total_compatible_pairs(inst),
        counts: vec![0; candidates.len()],
        choice: vec![0; inst.size()],
        distinct: 0,
        pairs: 0,
        best: None,
        explored: 0,
    };
    search.run(0);
    let (optimum, choice) = search.best.expect("at least one assignment");

    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); candidates.len()];
    for (i, &c) in choice.iter().enumerate() {
        groups[c].push(i);
    }
    let clusters = groups
        .into_iter()
        .enumerate()
        .filter(|(_, m)| !m.is_empty())
        .map(|(c, members)| Cluster {
            members,
            witness: candidates[c].resolution.clone(),
        })
        .collect();

    Ok(OracleResult {
        objective,
        optimum,
        witness: Partition::new(clusters),
        explored: search.explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::DEFAULT_NODE_LIMIT;
    use crate::objectives::evaluate;

    fn tight() -> Instance {
        Instance::from_strs(&["00NN", "0N00", "001N", "0100"]).unwrap()
    }

    #[test]
    fn tight_optima() {
        let inst = tight();
        let ie = exact_by_assignment(&inst, Objective::Iecmv, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(ie.optimum, 2);
        let members: Vec<Vec<usize>> =
            ie.witness.clusters().iter().map(|c| c.members.clone()).collect();
        assert_eq!(members, [vec![0, 2], vec![1, 3]]);
        assert_eq!(ie.explored, 16);

        let oe = exact_by_assignment(&inst, Objective::Oecmv, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(oe.optimum, 1);
        let cmv = exact_by_assignment(&inst, Objective::Cmv, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(cmv.optimum, 2);

        for r in [ie, oe, cmv] {
            let eval = evaluate(&inst, &r.witness).unwrap();
            assert_eq!(eval.value(r.objective), r.optimum);
        }
    }

    #[test]
    fn node_limit_enforced() {
        let inst = Instance::from_strs(&["NNNN", "NNNN", "NNN0"]).unwrap();
        assert!(matches!(
            exact_by_assignment(&inst, Objective::Cmv, 1 << 10),
            Err(Error::NodeLimit { limit: 1024, .. })
        ));
        assert!(exact_by_assignment(&inst, Objective::Cmv, 1 << 11).is_ok());
    }

    #[test]
    fn empty_instance() {
        let r = exact_by_assignment(&Instance::empty(), Objective::Iecmv, 1).unwrap();
        assert_eq!(r.optimum, 0);
        assert!(r.witness.is_empty());
    }
}
