#![allow(dead_code)]

use mixprod::{GroundSet, Ideal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random proper square-free ideals on at most `max_vertices`
/// vertices, reproducible from `seed`.
pub fn random_ideals(seed: u64, count: usize, max_vertices: u32) -> Vec<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = rng.gen_range(1..=max_vertices);
        let n = rng.gen_range(0..=len);
        let ground = GroundSet::new(n, len - n).unwrap();
        let full = ground.full_mask();
        let gens = rng.gen_range(1..=6);
        let sparse = rng.gen_bool(0.5);
        let supports: Vec<u64> = (0..gens)
            .map(|_| loop {
                let mut s = rng.gen::<u64>() & full;
                if sparse {
                    s &= rng.gen::<u64>();
                }
                if s != 0 {
                    break s;
                }
            })
            .collect();
        out.push(Ideal::from_supports(ground, supports));
    }
    out
}

/// `C(a, b)` by the multiplicative formula.
pub fn choose(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, k| acc * (a - k) as u128 / (k + 1) as u128)
}
