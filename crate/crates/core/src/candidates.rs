use rayon::prelude::*;

use crate::fingerprint::{Instance, ResolvedVector};

/// A resolved vector compatible with at least one member, together with
/// every member index compatible with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub resolution: ResolvedVector,
    /// Sorted member indices, `s(r)` in the usual notation.
    pub members: Vec<usize>,
}

impl Candidate {
    /// `d(r)`: the number of compatible members.
    pub fn degree(&self) -> usize {
        self.members.len()
    }
}

/// Every resolution of every member, deduplicated and sorted
/// lexicographically.
///
/// A resolved vector is compatible with a fingerprint exactly when it is one
/// of that fingerprint's resolutions, so collecting `(resolution, member)`
/// pairs yields the full compatible set of each candidate without a second
/// pass over the instance. Sorting the pairs makes the result independent of
/// how the enumeration is split across threads.
pub fn candidate_resolutions(inst: &Instance) -> Vec<Candidate> {
    let mut pairs: Vec<(ResolvedVector, usize)> = inst
        .fingerprints()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, f)| f.resolutions().map(move |r| (r, i)))
        .collect();
    pairs.par_sort_unstable();

    let mut out: Vec<Candidate> = Vec::new();
    for (r, i) in pairs {
        match out.last_mut() {
            Some(last) if last.resolution == r => last.members.push(i),
            _ => out.push(Candidate {
                resolution: r,
                members: vec![i],
            }),
        }
    }
    out
}

/// For each member, the indices (into `candidates`) of its resolutions.
pub(crate) fn member_candidates(n: usize, candidates: &[Candidate]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (ci, c) in candidates.iter().enumerate() {
        for &m in &c.members {
            out[m].push(ci);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::{compatible, Fingerprint};

    fn find<'a>(cands: &'a [Candidate], r: &str) -> &'a Candidate {
        cands
            .iter()
            .find(|c| c.resolution.to_string() == r)
            .unwrap_or_else(|| panic!("{r} not a candidate"))
    }

    /// Brute-force oracle: every length-l binary vector, kept when at least
    /// one member is compatible with it.
    fn brute_force(inst: &Instance) -> Vec<(String, Vec<usize>)> {
        let l = inst.length();
        let mut out = Vec::new();
        for code in 0u32..(1 << l) {
            let s: String = (0..l)
                .map(|i| if code >> (l - 1 - i) & 1 == 1 { '1' } else { '0' })
                .collect();
            let as_fp: Fingerprint = s.parse().unwrap();
            let members: Vec<usize> = inst
                .fingerprints()
                .iter()
                .enumerate()
                .filter(|(_, f)| compatible(&as_fp, f).unwrap())
                .map(|(i, _)| i)
                .collect();
            if !members.is_empty() {
                out.push((s, members));
            }
        }
        out
    }

    #[test]
    fn tight_instance_candidates_match_brute_force() {
        let inst = Instance::from_strs(&["00NN", "0N00", "001N", "0100"]).unwrap();
        let cands = candidate_resolutions(&inst);
        let got: Vec<(String, Vec<usize>)> = cands
            .iter()
            .map(|c| (c.resolution.to_string(), c.members.clone()))
            .collect();
        assert_eq!(got, brute_force(&inst));
        assert_eq!(find(&cands, "0000").members, [0, 1]);
        assert_eq!(find(&cands, "0010").members, [0, 2]);
        assert_eq!(find(&cands, "0100").members, [1, 3]);
    }

    #[test]
    fn single_members() {
        let cands = candidate_resolutions(&Instance::from_strs(&["101"]).unwrap());
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].resolution.to_string(), "101");
        assert_eq!(cands[0].members, [0]);

        let cands = candidate_resolutions(&Instance::from_strs(&["NN"]).unwrap());
        assert_eq!(cands.len(), 4);
        assert!(cands.iter().all(|c| c.members == [0]));
    }

    #[test]
    fn empty_instance_has_no_candidates() {
        assert!(candidate_resolutions(&Instance::empty()).is_empty());
    }
}
