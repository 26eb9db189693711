use crate::fingerprint::ResolvedVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    /// Sorted member indices.
    pub members: Vec<usize>,
    /// A common resolution of all members.
    pub witness: ResolvedVector,
}

/// Clusters of fingerprint indices, each with a witness resolution.
///
/// Clusters are kept in canonical order: members ascending inside a cluster,
/// clusters ordered by their smallest member (empty clusters last). Two
/// partitions with the same clusters therefore compare equal no matter how
/// they were built. Whether the clusters actually cover an instance is
/// checked by [`crate::objectives::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    clusters: Vec<Cluster>,
}

impl Partition {
    pub fn new(mut clusters: Vec<Cluster>) -> Self {
        for c in &mut clusters {
            c.members.sort_unstable();
        }
        clusters.sort_by_key(|c| c.members.first().copied().unwrap_or(usize::MAX));
        Partition { clusters }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// Cluster ordinal of every index in `0..n`, `None` where uncovered.
    /// Out-of-range members are ignored.
    pub fn assignment(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (ci, c) in self.clusters.iter().enumerate() {
            for &m in &c.members {
                if m < n {
                    out[m] = Some(ci);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let w = ResolvedVector::zeros(2);
        let a = Partition::new(vec![
            Cluster { members: vec![3, 2], witness: w.clone() },
            Cluster { members: vec![1, 0], witness: w.clone() },
        ]);
        let b = Partition::new(vec![
            Cluster { members: vec![0, 1], witness: w.clone() },
            Cluster { members: vec![2, 3], witness: w.clone() },
        ]);
        assert_eq!(a, b);
        assert_eq!(a.clusters()[0].members, [0, 1]);
        assert_eq!(a.assignment(5), [Some(0), Some(0), Some(1), Some(1), None]);
    }
}
