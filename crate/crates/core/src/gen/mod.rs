//! Instance generators.

mod cubic;
mod gadget;
mod random;

pub use cubic::{random_cubic, CubicGraph};
pub use gadget::{cover_to_partition, gen_gadget, GadgetCertificate, GadgetVertex, Slot};
pub use random::gen_random;

use crate::fingerprint::Instance;

/// Four fingerprints on which greedy is off by exactly a factor 2 for both
/// pair objectives. Compatible pairs are (0,1), (0,2) and (1,3); greedy
/// first takes `0000`, which covers {0,1}, while the optimum pairs {0,2}
/// and {1,3}.
pub fn gen_tight() -> Instance {
    Instance::from_strs(&["00NN", "0N00", "001N", "0100"])
        .expect("fixed rows are well formed")
        .with_name("tight")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::compatible;
    use crate::objectives::total_compatible_pairs;

    #[test]
    fn tight_pairs() {
        let inst = gen_tight();
        assert_eq!((inst.size(), inst.length(), inst.p()), (4, 4, 2));
        let fps = inst.fingerprints();
        let mut pairs = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if compatible(&fps[i], &fps[j]).unwrap() {
                    pairs.push((i, j));
                }
            }
        }
        assert_eq!(pairs, [(0, 1), (0, 2), (1, 3)]);
        assert_eq!(total_compatible_pairs(&inst), 3);
    }
}
