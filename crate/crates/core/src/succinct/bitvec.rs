//! Static bitvector with rank and select.
//!
//! Rank uses the two-level "rank9" layout: every 512-bit block stores the
//! absolute number of ones before it plus seven 9-bit cumulative counts for
//! the words inside it (25% overhead). Select samples the block holding
//! every 512th one (resp. zero) and binary-searches the block counts between
//! two samples, then finishes inside a word with a broadword search.
//!
//! Positions follow the usual 1-based convention: `rank1(i)` counts ones in
//! `[1, i]` and `select1(k)` is the position of the `k`-th one.

use crate::codec::{ByteReader, ByteWriter};
use crate::error::{Error, Result};

const BLOCK_WORDS: usize = 8;
const BLOCK_BITS: usize = 64 * BLOCK_WORDS;
const SELECT_SAMPLE: usize = 512;

/// Incremental bitvector construction.
#[derive(Default, Clone, Debug)]
pub struct BitVectorBuilder {
    words: Vec<u64>,
    len: usize,
}

impl BitVectorBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_len(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(64) {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / 64] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    /// Appends `count` copies of `bit`.
    pub fn push_run(&mut self, bit: bool, count: usize) {
        if !bit {
            self.len += count;
            self.words.resize(self.len.div_ceil(64), 0);
        } else {
            for _ in 0..count {
                self.push(true);
            }
        }
    }

    /// Sets the bit at 1-based position `pos`.
    pub fn set(&mut self, pos: usize) {
        assert!(
            pos >= 1 && pos <= self.len,
            "position {pos} outside [1, {}]",
            self.len
        );
        let p = pos - 1;
        self.words[p / 64] |= 1 << (p % 64);
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn build(self) -> BitVector {
        BitVector::from_words(self.words, self.len)
    }
}

#[derive(Clone, Debug)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
    ones: usize,
    /// Two entries per block: ones before the block, packed in-block counts.
    counts: Vec<u64>,
    select1_samples: Vec<u32>,
    select0_samples: Vec<u32>,
}

impl PartialEq for BitVector {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.words == other.words
    }
}

impl Eq for BitVector {}

impl BitVector {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut b = BitVectorBuilder::new();
        for bit in bits {
            b.push(bit);
        }
        b.build()
    }

    /// Builds from raw words; bits past `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        if !len.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % 64)) - 1;
        }
        let nblocks = words.len().div_ceil(BLOCK_WORDS);
        let mut counts = Vec::with_capacity(2 * nblocks + 2);
        let mut total = 0u64;
        let mut select1_samples = Vec::new();
        let mut select0_samples = Vec::new();
        for b in 0..nblocks {
            let before = total;
            let mut packed = 0u64;
            let mut inner = 0u64;
            for w in 0..BLOCK_WORDS {
                if w > 0 {
                    packed |= inner << (9 * (w - 1));
                }
                if let Some(&word) = words.get(b * BLOCK_WORDS + w) {
                    inner += u64::from(word.count_ones());
                }
            }
            total += inner;
            counts.push(before);
            counts.push(packed);
            // Sample the block holding ones (zeros) number 1, 513, 1025, ...
            while (select1_samples.len() * SELECT_SAMPLE) < total as usize {
                select1_samples.push(b as u32);
            }
            let zeros = (((b + 1) * BLOCK_BITS).min(len) as u64 - total) as usize;
            while select0_samples.len() * SELECT_SAMPLE < zeros {
                select0_samples.push(b as u32);
            }
        }
        counts.push(total);
        counts.push(0);
        Self {
            words,
            len,
            ones: total as usize,
            counts,
            select1_samples,
            select0_samples,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bit at 1-based position `pos`.
    #[inline]
    pub fn get(&self, pos: usize) -> bool {
        debug_assert!(pos >= 1 && pos <= self.len);
        let p = pos - 1;
        (self.words[p / 64] >> (p % 64)) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |p| self.get(p))
    }

    /// Ones before 0-based word index `w`.
    #[inline]
    fn ones_before_word(&self, w: usize) -> usize {
        let b = w / BLOCK_WORDS;
        let sub = w % BLOCK_WORDS;
        let base = self.counts[2 * b] as usize;
        if sub == 0 {
            base
        } else {
            base + ((self.counts[2 * b + 1] >> (9 * (sub - 1))) & 0x1ff) as usize
        }
    }

    /// Number of ones in `[1, i]`. Panics if `i > len`.
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        assert!(
            i <= self.len,
            "rank position {i} beyond length {}",
            self.len
        );
        let w = i / 64;
        let r = self.ones_before_word(w);
        let off = i % 64;
        if off == 0 {
            r
        } else {
            r + (self.words[w] & ((1u64 << off) - 1)).count_ones() as usize
        }
    }

    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Checked `rank_q(i)`.
    pub fn rank(&self, bit: bool, i: usize) -> Result<usize> {
        if i > self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.len,
            });
        }
        Ok(if bit { self.rank1(i) } else { self.rank0(i) })
    }

    /// Position of the `k`-th one, or `None` if there are fewer than `k`.
    #[inline]
    pub fn select1(&self, k: usize) -> Option<usize> {
        if k == 0 || k > self.ones {
            return None;
        }
        let s = (k - 1) / SELECT_SAMPLE;
        let lo = self.select1_samples[s] as usize;
        let hi = self
            .select1_samples
            .get(s + 1)
            .map_or(self.counts.len() / 2 - 2, |&b| b as usize);
        let block = self.last_block_below(lo, hi, k, |b| self.counts[2 * b] as usize);
        let mut rem = k - self.counts[2 * block] as usize;
        let packed = self.counts[2 * block + 1];
        // The packed counts are non-decreasing, so the word is the number
        // of them below `rem`.
        let mut sub = 0;
        for t in 1..BLOCK_WORDS {
            sub += usize::from((((packed >> (9 * (t - 1))) & 0x1ff) as usize) < rem);
        }
        if sub > 0 {
            rem -= ((packed >> (9 * (sub - 1))) & 0x1ff) as usize;
        }
        let w = block * BLOCK_WORDS + sub;
        Some(w * 64 + select_in_word(self.words[w], rem as u32 - 1) as usize + 1)
    }

    /// Position of the `k`-th zero, or `None` if there are fewer than `k`.
    pub fn select0(&self, k: usize) -> Option<usize> {
        if k == 0 || k > self.count_zeros() {
            return None;
        }
        let s = (k - 1) / SELECT_SAMPLE;
        let lo = self.select0_samples[s] as usize;
        let hi = self
            .select0_samples
            .get(s + 1)
            .map_or(self.counts.len() / 2 - 2, |&b| b as usize);
        let zeros_before = |b: usize| b * BLOCK_BITS - self.counts[2 * b] as usize;
        let block = self.last_block_below(lo, hi, k, zeros_before);
        let mut rem = k - zeros_before(block);
        let packed = self.counts[2 * block + 1];
        let mut sub = 0;
        for t in 1..BLOCK_WORDS {
            let c = t * 64 - ((packed >> (9 * (t - 1))) & 0x1ff) as usize;
            if c < rem {
                sub = t;
            } else {
                break;
            }
        }
        if sub > 0 {
            rem -= sub * 64 - ((packed >> (9 * (sub - 1))) & 0x1ff) as usize;
        }
        let w = block * BLOCK_WORDS + sub;
        Some(w * 64 + select_in_word(!self.words[w], rem as u32 - 1) as usize + 1)
    }

    /// Checked `select_q(k)`.
    pub fn select(&self, bit: bool, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::IndexOutOfRange { index: 0, limit: 1 });
        }
        let found = if bit {
            self.select1(k)
        } else {
            self.select0(k)
        };
        found.ok_or(Error::NotFound {
            bit: u8::from(bit),
            k,
        })
    }

    /// Largest block `b` in `[lo, hi]` with `before(b) < k`.
    #[inline]
    fn last_block_below(
        &self,
        lo: usize,
        hi: usize,
        k: usize,
        before: impl Fn(usize) -> usize,
    ) -> usize {
        let mut base = lo;
        let mut size = hi - lo + 1;
        while size > 1 {
            let half = size / 2;
            let mid = base + half;
            base = if before(mid) < k { mid } else { base };
            size -= half;
        }
        base
    }

    /// Heap bytes including the rank/select directories.
    pub fn size_in_bytes(&self) -> usize {
        self.words.len() * 8
            + self.counts.len() * 8
            + (self.select1_samples.len() + self.select0_samples.len()) * 4
    }

    /// Serializes the raw bits; directories are rebuilt on load.
    pub fn write_to(&self, w: &mut ByteWriter) {
        w.put_usize(self.len);
        w.put_words(&self.words);
    }

    pub fn read_from(r: &mut ByteReader<'_>) -> Result<Self> {
        let len = r.usize()?;
        let words = r.words()?;
        if words.len() != len.div_ceil(64) {
            return Err(Error::Malformed(format!(
                "bitvector of {len} bits stored in {} words",
                words.len()
            )));
        }
        Ok(Self::from_words(words, len))
    }

    #[doc(hidden)]
    pub fn flip(&mut self, pos: usize) {
        assert!(pos >= 1 && pos <= self.len);
        let mut words = std::mem::take(&mut self.words);
        words[(pos - 1) / 64] ^= 1 << ((pos - 1) % 64);
        *self = Self::from_words(words, self.len);
    }
}

/// 0-based position of the `(r + 1)`-th set bit of `w`.
#[inline]
pub(crate) fn select_in_word(w: u64, r: u32) -> u32 {
    debug_assert!(r < w.count_ones());
    const L8: u64 = 0x0101_0101_0101_0101;
    const H8: u64 = 0x8080_8080_8080_8080;
    let mut s = w - ((w >> 1) & 0x5555_5555_5555_5555);
    s = (s & 0x3333_3333_3333_3333) + ((s >> 2) & 0x3333_3333_3333_3333);
    s = (s + (s >> 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    // Byte i of `sums` holds the ones in bytes 0..=i.
    let sums = s.wrapping_mul(L8);
    let below = (((u64::from(r) * L8) | H8) - sums) & H8;
    let shift = below.count_ones() * 8;
    let before = ((sums << 8) >> shift) & 0xff;
    let byte = (w >> shift) & 0xff;
    shift + u32::from(SELECT_IN_BYTE[byte as usize][(u64::from(r) - before) as usize])
}

/// `SELECT_IN_BYTE[b][r]`: offset of the `(r + 1)`-th set bit of `b`.
static SELECT_IN_BYTE: [[u8; 8]; 256] = {
    let mut t = [[0u8; 8]; 256];
    let mut b = 0;
    while b < 256 {
        let mut r = 0;
        let mut i = 0;
        while i < 8 {
            if (b >> i) & 1 == 1 {
                t[b][r] = i as u8;
                r += 1;
            }
            i += 1;
        }
        b += 1;
    }
    t
};

impl std::fmt::Display for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
