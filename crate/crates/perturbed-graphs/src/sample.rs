//! Seeded randomness utilities.
//!
//! Every randomized operation in this crate is a pure function of an explicit
//! 64-bit seed. The generator is ChaCha8 (seedable, counter-based), and
//! distinct-item sampling uses Floyd's algorithm over canonical object
//! indices, so results do not depend on any set iteration order.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// splitmix64 finalizer; a bijection on u64.
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Child seed for lane `a`, index `b` under a master seed.
pub fn derive_seed(master: u64, a: u64, b: u64) -> u64 {
    let mut s = mix(master);
    s = mix(s ^ mix(a ^ 0xA076_1D64_78BD_642F));
    mix(s ^ mix(b ^ 0xE703_7ED1_A0B4_28DB))
}

/// `m` distinct values from `0..universe`, sorted ascending (Floyd).
pub fn sample_distinct(rng: &mut ChaCha8Rng, universe: u64, m: u64) -> Vec<u64> {
    assert!(m <= universe, "cannot sample {m} of {universe}");
    let mut chosen: HashSet<u64> = HashSet::with_capacity(m as usize);
    for j in (universe - m)..universe {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let mut v: Vec<u64> = chosen.into_iter().collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floyd_sample_is_distinct_and_in_range() {
        let mut rng = rng_from_seed(7);
        for _ in 0..100 {
            let s = sample_distinct(&mut rng, 50, 20);
            assert_eq!(s.len(), 20);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(s.iter().all(|&x| x < 50));
        }
        assert_eq!(sample_distinct(&mut rng, 5, 5), vec![0, 1, 2, 3, 4]);
        assert!(sample_distinct(&mut rng, 9, 0).is_empty());
    }

    #[test]
    fn floyd_sample_deterministic() {
        let a = sample_distinct(&mut rng_from_seed(42), 1000, 100);
        let b = sample_distinct(&mut rng_from_seed(42), 1000, 100);
        assert_eq!(a, b);
    }

    #[test]
    fn floyd_sample_marginal_is_uniform() {
        // each item should be chosen with probability m/N; check item 0
        let (universe, m, trials) = (20u64, 5u64, 20_000u64);
        let mut rng = rng_from_seed(3);
        let mut hits = 0u64;
        for _ in 0..trials {
            if sample_distinct(&mut rng, universe, m).contains(&0) {
                hits += 1;
            }
        }
        let p = m as f64 / universe as f64;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        assert!((hits as f64 - trials as f64 * p).abs() < 3.0 * sigma);
    }

    #[test]
    fn derived_seeds_differ() {
        let mut seen = HashSet::new();
        for a in 0..50u64 {
            for b in 0..50u64 {
                assert!(seen.insert(derive_seed(99, a, b)));
            }
        }
    }
}
