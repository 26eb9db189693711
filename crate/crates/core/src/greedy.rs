//! Greedy maximum-degree clustering.
//!
//! Each round picks the candidate resolution compatible with the most
//! still-unclustered fingerprints, turns those fingerprints into a cluster
//! and removes them. The resulting partition is within a factor 2 of optimal
//! for both the inside (co-clustered pairs) and outside (split pairs)
//! objectives.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::num::NonZeroUsize;

use crate::candidates::{candidate_resolutions, member_candidates};
use crate::fingerprint::{Instance, ResolvedVector};
use crate::partition::{Cluster, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pick {
    pub resolution: ResolvedVector,
    /// Degree over the whole instance.
    pub degree: usize,
    /// Members still unclustered when the pick was made; the cluster size.
    pub live: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreedyTrace {
    pub picks: Vec<Pick>,
    pub iterations: usize,
}

pub fn greedy_cluster(inst: &Instance) -> (Partition, GreedyTrace) {
    greedy_cluster_streamed(inst, None)
}

/// Greedy clustering that stops after `budget` picks, if given. Whatever is
/// left unclustered at that point becomes singleton clusters.
pub fn greedy_cluster_streamed(
    inst: &Instance,
    budget: Option<NonZeroUsize>,
) -> (Partition, GreedyTrace) {
    let n = inst.size();
    let candidates = candidate_resolutions(inst);
    let by_member = member_candidates(n, &candidates);

    let mut live: Vec<usize> = candidates.iter().map(|c| c.degree()).collect();
    // Max-heap on degree; among equal degrees the smaller candidate index,
    // i.e. the lexicographically smaller resolution, wins. Entries go stale
    // as degrees drop and are refreshed when popped.
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = live
        .iter()
        .enumerate()
        .map(|(ci, &d)| (d, Reverse(ci)))
        .collect();

    let mut unclustered = vec![true; n];
    let mut remaining = n;
    let mut clusters = Vec::new();
    let mut trace = GreedyTrace::default();
    let limit = budget.map_or(usize::MAX, NonZeroUsize::get);

    while remaining > 0 && trace.iterations < limit {
        let Some((degree, Reverse(ci))) = heap.pop() else {
            unreachable!("every unclustered member has a live candidate");
        };
        if degree != live[ci] {
            if live[ci] > 0 {
                heap.push((live[ci], Reverse(ci)));
            }
            continue;
        }
        let cand = &candidates[ci];
        let members: Vec<usize> = cand
            .members
            .iter()
            .copied()
            .filter(|&m| unclustered[m])
            .collect();
        debug_assert_eq!(members.len(), degree);
        for &m in &members {
            unclustered[m] = false;
            for &c in &by_member[m] {
                live[c] -= 1;
            }
        }
        remaining -= members.len();
        trace.iterations += 1;
        trace.picks.push(Pick {
            resolution: cand.resolution.clone(),
            degree: cand.degree(),
            live: members.len(),
        });
        clusters.push(Cluster {
            members,
            witness: cand.resolution.clone(),
        });
    }

    for (i, f) in inst.fingerprints().iter().enumerate() {
        if unclustered[i] {
            clusters.push(Cluster {
                members: vec![i],
                witness: f.resolutions().next().expect("at least one resolution"),
            });
        }
    }
    (Partition::new(clusters), trace)
}
