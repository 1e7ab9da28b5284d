//! Brute-force ground truth and executable combinatorial bounds.
//!
//! Nothing here touches the indexes: the oracle enumerates the distinct
//! j-grams of a window by their base-σ ranks, and the extension checks
//! compare two oracle runs against the closed-form bounds.

use crate::error::{Error, Result};
use crate::text::{Letter, Text};

/// Longest window the oracle accepts.
pub const MAX_WINDOW: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub length: usize,
    /// Lexicographically smallest word of `length` absent from the window.
    pub smallest_absent: Vec<Letter>,
    /// `all_words[j - 1]`: sorted ranks (base σ, letter `c` as digit `c - 1`)
    /// of the distinct j-grams in the window, for `j = 1..=length`.
    pub all_words: Vec<Vec<u64>>,
}

impl OracleResult {
    pub fn contains(&self, word: &[Letter], sigma: usize) -> bool {
        match self.all_words.get(word.len().wrapping_sub(1)) {
            Some(ranks) => ranks.binary_search(&word_rank(word, sigma)).is_ok(),
            None => false,
        }
    }

    /// Checks a claimed answer: right length, absent, and every word one
    /// letter shorter present.
    pub fn validate(&self, word: &[Letter], sigma: usize) -> bool {
        let shorter_complete = self.length == 1
            || self.all_words[self.length - 2].len() as u128
                == (sigma as u128).pow(self.length as u32 - 1);
        word.len() == self.length
            && word.iter().all(|&c| c >= 1 && c as usize <= sigma)
            && !self.contains(word, sigma)
            && shorter_complete
    }
}

fn word_rank(word: &[Letter], sigma: usize) -> u64 {
    word.iter()
        .fold(0u64, |acc, &c| acc * sigma as u64 + u64::from(c - 1))
}

fn unrank(mut r: u64, j: usize, sigma: usize) -> Vec<Letter> {
    let mut out = vec![0; j];
    for slot in out.iter_mut().rev() {
        *slot = (r % sigma as u64) as Letter + 1;
        r /= sigma as u64;
    }
    out
}

/// Shortest absent word of `window` over letters `1..=sigma`.
pub fn oracle_codes(window: &[Letter], sigma: usize) -> Result<OracleResult> {
    if window.len() > MAX_WINDOW {
        return Err(Error::WindowTooLarge {
            len: window.len(),
            limit: MAX_WINDOW,
        });
    }
    if sigma < 2 {
        return Err(Error::UnaryAlphabet);
    }
    let mut all_words = Vec::new();
    for j in 1.. {
        let mut ranks: Vec<u64> = if window.len() >= j {
            window.windows(j).map(|w| word_rank(w, sigma)).collect()
        } else {
            Vec::new()
        };
        ranks.sort_unstable();
        ranks.dedup();
        let total = (sigma as u128).pow(j as u32);
        if (ranks.len() as u128) < total {
            let gap = ranks
                .iter()
                .enumerate()
                .find(|&(i, &r)| r != i as u64)
                .map_or(ranks.len() as u64, |(i, _)| i as u64);
            all_words.push(ranks);
            return Ok(OracleResult {
                length: j,
                smallest_absent: unrank(gap, j, sigma),
                all_words,
            });
        }
        all_words.push(ranks);
    }
    unreachable!()
}

/// Shortest absent word of `T[a..b]` (1-based, inclusive).
pub fn oracle_saw(text: &Text, a: usize, b: usize) -> Result<OracleResult> {
    let n = text.len();
    if a == 0 || a > b || b > n {
        return Err(Error::RangeOutOfBounds { a, b, n });
    }
    oracle_codes(&text.codes()[a - 1..b], text.sigma())
}

/// Smallest period of `s` from its border array.
pub fn period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut border = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    n - border[n - 1]
}

pub fn is_period<T: Eq>(s: &[T], p: usize) -> bool {
    p >= 1 && (0..s.len().saturating_sub(p)).all(|i| s[i] == s[i + p])
}

/// All periods `1..=|s|` of `s`, ascending.
pub fn periods<T: Eq>(s: &[T]) -> Vec<usize> {
    (1..=s.len()).filter(|&p| is_period(s, p)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtensionReport {
    /// SAW length of `X`.
    pub lambda: usize,
    /// SAW length of `XY`.
    pub m: usize,
    /// Distance from `m - λ` to the tighter of the two upper bounds.
    pub slack: f64,
}

/// Upper bound on `m - λ` when `XY` extends `X` by `y_len` letters.
pub fn extension_bound(lambda: usize, y_len: usize, sigma: usize) -> f64 {
    let log = (y_len as f64 / lambda as f64).ln() / (sigma as f64).ln();
    f64::max(10.0, 4.0 + log)
}

/// Upper bound on `m - λ` given `|Y| <= m·τ`, with the smallest admissible
/// integer `τ >= 16`.
pub fn reverse_bound(m: usize, y_len: usize, sigma: usize) -> f64 {
    let tau = y_len.div_ceil(m).max(16);
    10.0 + 2.0 * (tau as f64).ln() / (sigma as f64).ln()
}

/// Runs the oracle on `X` and `XY` and checks both extension bounds.
pub fn check_extension_bounds(x: &[Letter], y: &[Letter], sigma: usize) -> Result<ExtensionReport> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let lambda = oracle_codes(x, sigma)?.length;
    let xy: Vec<Letter> = x.iter().chain(y).copied().collect();
    let m = oracle_codes(&xy, sigma)?.length;
    let fail = |what: &str| {
        Error::BoundViolated(format!(
            "{what}: |X| = {}, |Y| = {}, sigma = {sigma}, lambda = {lambda}, m = {m}",
            x.len(),
            y.len()
        ))
    };
    if m < lambda {
        return Err(fail("extension shortened the answer"));
    }
    let d = (m - lambda) as f64;
    let upper = extension_bound(lambda, y.len(), sigma);
    if d > upper + 1e-9 {
        return Err(fail("extension bound"));
    }
    let reverse = reverse_bound(m, y.len(), sigma);
    if d > reverse + 1e-9 {
        return Err(fail("reverse bound"));
    }
    Ok(ExtensionReport {
        lambda,
        m,
        slack: upper.min(reverse) - d,
    })
}

/// When every `UW` with `|U| = k` occurs in `s`, whether `|s| >= |W|·σ^k/4`.
/// `None` if some `UW` is missing.
pub fn check_context_length(s: &[Letter], w: &[Letter], k: usize, sigma: usize) -> Option<bool> {
    let total = sigma.checked_pow(k as u32)?;
    let len = k + w.len();
    let mut seen = vec![false; total];
    if s.len() >= len {
        for win in s.windows(len) {
            if &win[k..] == w {
                seen[word_rank(&win[..k], sigma) as usize] = true;
            }
        }
    }
    seen.iter()
        .all(|&x| x)
        .then(|| 4 * s.len() >= w.len() * total)
}

/// Cyclic de Bruijn sequence of order `k` over `1..=sigma`, linearised by
/// appending its first `k - 1` letters.
pub fn de_bruijn(sigma: usize, k: usize) -> Vec<Letter> {
    fn rec(t: usize, p: usize, k: usize, sigma: usize, a: &mut [usize], out: &mut Vec<Letter>) {
        if t > k {
            if k.is_multiple_of(p) {
                out.extend(a[1..=p].iter().map(|&x| x as Letter + 1));
            }
        } else {
            a[t] = a[t - p];
            rec(t + 1, p, k, sigma, a, out);
            for v in a[t - p] + 1..sigma {
                a[t] = v;
                rec(t + 1, t, k, sigma, a, out);
            }
        }
    }
    if k == 0 {
        return Vec::new();
    }
    let mut a = vec![0; k + 1];
    let mut out = Vec::new();
    rec(1, 1, k, sigma, &mut a, &mut out);
    let head: Vec<Letter> = out[..k - 1].to_vec();
    out.extend(head);
    out
}
