use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::fingerprint::Instance;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// Minimize the number of clusters.
    Cmv,
    /// Maximize compatible pairs inside clusters.
    Iecmv,
    /// Minimize compatible pairs split across clusters.
    Oecmv,
}

impl Objective {
    pub const ALL: [Objective; 3] = [Objective::Cmv, Objective::Iecmv, Objective::Oecmv];

    pub fn maximize(self) -> bool {
        matches!(self, Objective::Iecmv)
    }

    pub fn name(self) -> &'static str {
        match self {
            Objective::Cmv => "cmv",
            Objective::Iecmv => "iecmv",
            Objective::Oecmv => "oecmv",
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cmv" => Ok(Objective::Cmv),
            "iecmv" => Ok(Objective::Iecmv),
            "oecmv" => Ok(Objective::Oecmv),
            other => Err(Error::InvalidParameter(format!("unknown objective {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Evaluation {
    pub cmv: u64,
    pub iecmv: u64,
    pub oecmv: u64,
    pub total_compatible_pairs: u64,
}

impl Evaluation {
    pub fn value(&self, objective: Objective) -> u64 {
        match objective {
            Objective::Cmv => self.cmv,
            Objective::Iecmv => self.iecmv,
            Objective::Oecmv => self.oecmv,
        }
    }
}

/// Checks that `part` is a disjoint cover of `inst` by nonempty clusters of
/// pairwise compatible fingerprints, each witness resolving all members.
///
/// An index outside the instance is reported as
/// [`Error::IndexOutOfRange`]; every other defect as
/// [`Error::InvalidPartition`] carrying the first violation found.
pub fn validate(inst: &Instance, part: &Partition) -> Result<()> {
    let n = inst.size();
    for c in part.clusters() {
        if let Some(&index) = c.members.iter().find(|&&m| m >= n) {
            return Err(Error::IndexOutOfRange { index, len: n });
        }
    }
    let invalid = |v| Err(Error::InvalidPartition(v));

    let mut seen = vec![false; n];
    for (ci, c) in part.clusters().iter().enumerate() {
        if c.members.is_empty() {
            return invalid(Violation::EmptyCluster { cluster: ci });
        }
        for &m in &c.members {
            if std::mem::replace(&mut seen[m], true) {
                return invalid(Violation::DuplicateMember { index: m });
            }
        }
    }
    if let Some(index) = seen.iter().position(|&s| !s) {
        return invalid(Violation::Uncovered { index });
    }

    let fps = inst.fingerprints();
    for (ci, c) in part.clusters().iter().enumerate() {
        if c.witness.len() != inst.length() {
            return invalid(Violation::WitnessLength { cluster: ci });
        }
        for (k, &a) in c.members.iter().enumerate() {
            for &b in &c.members[k + 1..] {
                if !fps[a].compatible_unchecked(&fps[b]) {
                    return invalid(Violation::Incompatible { a, b });
                }
            }
        }
        if let Some(&member) = c
            .members
            .iter()
            .find(|&&m| !fps[m].resolved_by_unchecked(&c.witness))
        {
            return invalid(Violation::BadWitness { cluster: ci, member });
        }
    }
    Ok(())
}

pub fn is_valid(inst: &Instance, part: &Partition) -> bool {
    validate(inst, part).is_ok()
}

/// Number of unordered index pairs whose fingerprints are compatible.
pub fn total_compatible_pairs(inst: &Instance) -> u64 {
    let fps = inst.fingerprints();
    (0..fps.len())
        .into_par_iter()
        .map(|i| {
            fps[i + 1..]
                .iter()
                .filter(|g| fps[i].compatible_unchecked(g))
                .count() as u64
        })
        .sum()
}

/// Scores a valid partition under all three objectives.
pub fn evaluate(inst: &Instance, part: &Partition) -> Result<Evaluation> {
    validate(inst, part)?;
    let total = total_compatible_pairs(inst);
    let iecmv: u64 = part
        .clusters()
        .iter()
        .map(|c| {
            let s = c.members.len() as u64;
            s * (s - 1) / 2
        })
        .sum();
    Ok(Evaluation {
        cmv: part.len() as u64,
        iecmv,
        oecmv: total - iecmv,
        total_compatible_pairs: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::ResolvedVector;
    use crate::greedy::greedy_cluster;
    use crate::partition::Cluster;

    fn tight() -> Instance {
        Instance::from_strs(&["00NN", "0N00", "001N", "0100"]).unwrap()
    }

    fn part(groups: &[(&[usize], &str)]) -> Partition {
        Partition::new(
            groups
                .iter()
                .map(|(m, w)| Cluster {
                    members: m.to_vec(),
                    witness: w.parse::<ResolvedVector>().unwrap(),
                })
                .collect(),
        )
    }

    #[test]
    fn validate_examples() {
        let inst = tight();
        validate(&inst, &greedy_cluster(&inst).0).unwrap();
        let bad = part(&[(&[2, 3], "0110"), (&[0], "0000"), (&[1], "0000")]);
        assert!(matches!(
            validate(&inst, &bad),
            Err(Error::InvalidPartition(Violation::Incompatible { a: 2, b: 3 }))
        ));
        validate(&Instance::empty(), &Partition::default()).unwrap();
    }

    #[test]
    fn validate_structural_violations() {
        let inst = tight();
        let oob = part(&[(&[0, 1, 2, 3, 7], "0000")]);
        assert!(matches!(
            validate(&inst, &oob),
            Err(Error::IndexOutOfRange { index: 7, len: 4 })
        ));
        let dup = part(&[(&[0, 1], "0000"), (&[1, 2], "0010"), (&[3], "0100")]);
        assert!(matches!(
            validate(&inst, &dup),
            Err(Error::InvalidPartition(Violation::DuplicateMember { index: 1 }))
        ));
        let missing = part(&[(&[0, 1], "0000"), (&[3], "0100")]);
        assert!(matches!(
            validate(&inst, &missing),
            Err(Error::InvalidPartition(Violation::Uncovered { index: 2 }))
        ));
        let witness = part(&[(&[0, 1], "0001"), (&[2], "0010"), (&[3], "0100")]);
        assert!(matches!(
            validate(&inst, &witness),
            Err(Error::InvalidPartition(Violation::BadWitness { cluster: 0, member: 1 }))
        ));
        let short = part(&[(&[0, 1], "000"), (&[2], "0010"), (&[3], "0100")]);
        assert!(matches!(
            validate(&inst, &short),
            Err(Error::InvalidPartition(Violation::WitnessLength { cluster: 0 }))
        ));
        let empty = part(&[(&[0, 1], "0000"), (&[2], "0010"), (&[3], "0100"), (&[], "0000")]);
        assert!(matches!(
            validate(&inst, &empty),
            Err(Error::InvalidPartition(Violation::EmptyCluster { cluster: 3 }))
        ));
    }

    #[test]
    fn pair_counts() {
        assert_eq!(total_compatible_pairs(&tight()), 3);
        let distinct = Instance::from_strs(&["00", "01", "10", "11"]).unwrap();
        assert_eq!(total_compatible_pairs(&distinct), 0);
        let copies = Instance::from_strs(&["1N0"; 6]).unwrap();
        assert_eq!(total_compatible_pairs(&copies), 15);
    }

    #[test]
    fn evaluate_examples() {
        let inst = tight();
        let greedy = evaluate(&inst, &greedy_cluster(&inst).0).unwrap();
        assert_eq!((greedy.cmv, greedy.iecmv, greedy.oecmv), (3, 1, 2));
        let opt = part(&[(&[0, 2], "0010"), (&[1, 3], "0100")]);
        let opt = evaluate(&inst, &opt).unwrap();
        assert_eq!((opt.cmv, opt.iecmv, opt.oecmv), (2, 2, 1));
        let singles = part(&[(&[0], "0000"), (&[1], "0000"), (&[2], "0010"), (&[3], "0100")]);
        let singles = evaluate(&inst, &singles).unwrap();
        assert_eq!((singles.cmv, singles.iecmv, singles.oecmv), (4, 0, 3));
    }

    #[test]
    fn objective_parsing() {
        assert_eq!("IECMV".parse::<Objective>().unwrap(), Objective::Iecmv);
        assert!("cmv2".parse::<Objective>().is_err());
    }
}
