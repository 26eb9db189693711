use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::error::{Error, Result};
use crate::fingerprint::{Fingerprint, Instance, ResolvedVector, Symbol};

/// Planted-center instance: `centers` random binary vectors of length `l`;
/// each of the `n` fingerprints copies a uniformly chosen center and then
/// masks `min(Binomial(l, missing_rate), p)` distinct positions with `N`.
/// Identical arguments give identical instances.
pub fn gen_random(
    n: usize,
    l: usize,
    p: usize,
    centers: usize,
    missing_rate: f64,
    seed: u64,
) -> Result<Instance> {
    if p > l {
        return Err(Error::InvalidParameter(format!("p = {p} exceeds l = {l}")));
    }
    if centers == 0 {
        return Err(Error::InvalidParameter("centers must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&missing_rate) {
        return Err(Error::InvalidParameter(format!(
            "missing rate {missing_rate} outside [0, 1]"
        )));
    }
    let name = format!("random-n{n}-l{l}-p{p}-c{centers}-r{missing_rate}-s{seed}");
    if n == 0 {
        return Ok(Instance::empty().with_name(name));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let planted: Vec<ResolvedVector> = (0..centers)
        .map(|_| {
            let bits: Vec<bool> = (0..l).map(|_| rng.random()).collect();
            ResolvedVector::from_bools(&bits)
        })
        .collect();
    let binomial = Binomial::new(l as u64, missing_rate)
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;

    let fingerprints = (0..n)
        .map(|_| {
            let center = &planted[rng.random_range(0..centers)];
            let mut f = center.to_fingerprint();
            let k = (binomial.sample(&mut rng) as usize).min(p);
            for pos in sample(&mut rng, l, k) {
                f.set(pos, Symbol::Missing);
            }
            f
        })
        .collect::<Vec<Fingerprint>>();
    Ok(Instance::new(fingerprints)?.with_name(name))
}
