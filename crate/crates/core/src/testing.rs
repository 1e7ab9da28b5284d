//! Fixtures and brute-force helpers shared by unit tests.

use std::collections::HashSet;

use rand::{rngs::StdRng, Rng, SeedableRng};

use crate::text::{Letter, Text};

pub const RUNNING: &[u8] = b"abaabaaabbabbbaaab";

pub fn running() -> Text {
    Text::from_bytes(RUNNING, None).unwrap()
}

pub fn random_text(rng: &mut StdRng, n: usize, sigma: usize) -> Text {
    let codes = (0..n).map(|_| rng.gen_range(1..=sigma as Letter)).collect();
    Text::from_codes(codes, sigma).unwrap()
}

/// Every binary text up to length 8, plus random texts over 2..=5 letters.
pub fn all_small_texts() -> Vec<Text> {
    let mut out = vec![running()];
    for n in 1..=8 {
        for mask in 0u32..(1 << n) {
            let codes = (0..n).map(|i| ((mask >> i) & 1) + 1).collect();
            out.push(Text::from_codes(codes, 2).unwrap());
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..60 {
        let sigma = rng.gen_range(2..=5);
        let n = rng.gen_range(1..=70);
        out.push(random_text(&mut rng, n, sigma));
    }
    out
}

pub fn word_occurs(haystack: &[Letter], word: &[Letter]) -> bool {
    word.len() <= haystack.len() && haystack.windows(word.len()).any(|w| w == word)
}

/// Whether `T[a..b]` contains all `σ^j` words of length `j`, by enumeration.
pub fn naive_covers(text: &Text, j: usize, a: usize, b: usize) -> bool {
    let window = &text.codes()[a - 1..b];
    if window.len() < j {
        return false;
    }
    let distinct: HashSet<&[Letter]> = window.windows(j).collect();
    distinct.len() as u128 == (text.sigma() as u128).pow(j as u32)
}
