//! Per-length occurrence arrays.
//!
//! For a word length `j`, `APP_j` is the rank array of all length-`j`
//! windows followed by every rank `1..=σ^j`, and `PRE_j[i]` is the previous
//! position holding the same rank (0 if none). Because every rank reappears
//! in the appended tail, `T[a..b]` contains all `σ^j` words exactly when
//! every entry of `PRE_j[b-j+2..]` is at least `a`. The minimum of that
//! suffix of `PRE_j` is the `FTR` value of position `b`: the rightmost start
//! `s` such that `T[s..b]` contains every length-`j` word, or 0.

use crate::error::{Error, Result};
use crate::succinct::Rmq;
use crate::text::{RankArray, SawAnswer, Text};

/// Read access to the FTR row of one word length.
pub trait FtrSource {
    fn word_len(&self) -> usize;
    fn text_len(&self) -> usize;
    /// `(FTR[j][i], k)` where `k` is the leftmost index of `PRE_j` in
    /// `[max(1, i-j+2), |PRE_j|]` holding the minimum.
    fn ftr_value(&self, i: usize) -> Result<(usize, usize)>;
}

#[derive(Clone, Debug)]
pub struct OccLayer {
    j: usize,
    n: usize,
    app: Vec<u32>,
    pre: Vec<u32>,
    rmq: Rmq,
}

impl OccLayer {
    /// Builds `APP_j`, `PRE_j` and an RMQ over `PRE_j`. Only lengths below
    /// the global shortest absent word length are accepted: for those every
    /// length-`j` word occurs and `σ^j <= n`.
    pub fn build(text: &Text, ranks: &RankArray) -> Result<Self> {
        let lambda = text.lambda();
        let j = ranks.j;
        if j == 0 || j >= lambda {
            return Err(Error::LayerBeyondEll { j, lambda });
        }
        let n = text.len();
        assert!(
            2 * n < u32::MAX as usize,
            "text too long for 32-bit positions"
        );
        let words = text.clamped_power(j);
        debug_assert!(words <= n);
        let mut app: Vec<u32> = Vec::with_capacity(ranks.len() + words);
        app.extend(ranks.ranks.iter().map(|&r| r as u32));
        app.extend(1..=words as u32);
        let mut last = vec![0u32; words + 1];
        let pre: Vec<u32> = app
            .iter()
            .enumerate()
            .map(|(i, &r)| std::mem::replace(&mut last[r as usize], i as u32 + 1))
            .collect();
        let rmq = Rmq::new(&pre);
        Ok(Self {
            j,
            n,
            app,
            pre,
            rmq,
        })
    }

    /// Convenience: computes the ranks and builds the layer.
    pub fn for_length(text: &Text, j: usize) -> Result<Self> {
        let lambda = text.lambda();
        if j == 0 || j >= lambda {
            return Err(Error::LayerBeyondEll { j, lambda });
        }
        Self::build(text, &text.rank_substrings(j)?)
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn app(&self) -> &[u32] {
        &self.app
    }

    pub fn pre(&self) -> &[u32] {
        &self.pre
    }

    pub fn rmq(&self) -> &Rmq {
        &self.rmq
    }

    pub fn into_parts(self) -> (Vec<u32>, Rmq) {
        (self.pre, self.rmq)
    }

    /// First `PRE_j` index whose suffix minimum is `FTR[j][i]`.
    #[inline]
    pub(crate) fn window_start(j: usize, i: usize) -> usize {
        (i + 2).saturating_sub(j).max(1)
    }

    fn check_range(&self, a: usize, b: usize) -> Result<()> {
        if a == 0 || a > b || b > self.n {
            Err(Error::RangeOutOfBounds { a, b, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Whether `T[a..b]` contains every word of length `j`.
    pub fn covers_all(&self, a: usize, b: usize) -> Result<bool> {
        self.check_range(a, b)?;
        let (value, _) = self.ftr_value(b)?;
        Ok(value >= a)
    }

    /// Suffix minima of `PRE_j` with leftmost argmins, indexed by 1-based
    /// start: `out[s - 1] = (min PRE_j[s..], leftmost argmin)`.
    pub fn suffix_minima(&self) -> Vec<(u32, u32)> {
        let mut out = vec![(0u32, 0u32); self.pre.len()];
        let mut best = (u32::MAX, 0u32);
        for s in (1..=self.pre.len()).rev() {
            let v = self.pre[s - 1];
            if v <= best.0 {
                best = (v, s as u32);
            }
            out[s - 1] = best;
        }
        out
    }
}

impl FtrSource for OccLayer {
    fn word_len(&self) -> usize {
        self.j
    }

    fn text_len(&self) -> usize {
        self.n
    }

    fn ftr_value(&self, i: usize) -> Result<(usize, usize)> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.n,
            });
        }
        let k = self
            .rmq
            .argmin(Self::window_start(self.j, i), self.pre.len());
        Ok((self.pre[k - 1] as usize, k))
    }
}

/// The word missing from `T[a..b]` identified by an FTR entry `value < a`
/// and its argmin `k`: the occurrence at `value` when positive (its next
/// occurrence starts too late), otherwise the first occurrence at `k`.
pub fn witness_from_argmin(j: usize, n: usize, value: usize, k: usize) -> Result<SawAnswer> {
    if value > 0 {
        if value + j - 1 > n {
            return Err(Error::InternalInvariant(format!(
                "FTR value {value} for j = {j} runs past the text end {n}"
            )));
        }
        Ok(SawAnswer::substring(value, value + j - 1))
    } else if k >= 1 && k + j - 1 <= n {
        Ok(SawAnswer::substring(k, k + j - 1))
    } else {
        Err(Error::InternalInvariant(format!(
            "zero FTR value with argmin {k} in the appended region (j = {j}, n = {n})"
        )))
    }
}
