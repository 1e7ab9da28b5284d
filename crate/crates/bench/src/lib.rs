//! Shared fixtures for the benchmarks.

use isaw_core::Text;
use rand::{rngs::StdRng, Rng, SeedableRng};

pub fn random_text(n: usize, sigma: usize, seed: u64) -> Text {
    let mut rng = StdRng::seed_from_u64(seed);
    let codes = (0..n).map(|_| rng.gen_range(1..=sigma as u32)).collect();
    Text::from_codes(codes, sigma).unwrap()
}

/// Uniform ranges `1 <= a <= b <= n`.
pub fn random_ranges(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            (a, rng.gen_range(a..=n))
        })
        .collect()
}

/// Ranges of exactly `len` letters.
pub fn fixed_ranges(n: usize, len: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=n - len + 1);
            (a, a + len - 1)
        })
        .collect()
}
