//! Range minimum queries that do not keep the source array.
//!
//! The array is encoded by the balanced-parentheses sequence produced by the
//! left-to-right min-stack: each element pops every stacked element strictly
//! larger than itself (one `)` per pop) and is then pushed (one `(`); the
//! remaining elements are closed at the end. With `(` as a one-bit the
//! excess after bit `p` is `2 * rank1(p) - p` and equals the stack height.
//!
//! For `l < r`, let `D` be the height just before the leftmost minimum `m`
//! of `A[l..=r]` is pushed. Between the pushes of `l` and `r` the height never
//! drops below `D`, and reaches `D` for the last time right before `m`'s `(`
//! when `m > l`; when `m = l` the height never drops below that of `l`. So the
//! answer is recovered from the rightmost minimum of the excess over
//! `[select1(l), select1(r)]`, which is a plain ±1 range-minimum problem
//! answered with per-word and per-superblock minima, a sparse table over
//! superblocks and byte lookup tables inside words.
//!
//! Ranges reaching the end of the array skip all of that: the leftmost
//! minimum of `A[l..]` is the first element at or after `l` that is still on
//! the stack at the end, and those survivors are marked in a bitvector
//! derived from the parentheses on load.

use super::bitvec::{BitVector, BitVectorBuilder};
use super::packed::{bits_for, PackedInts};
use crate::codec::{ByteReader, ByteWriter};
use crate::error::{Error, Result};

const SUPER_BITS: usize = 512;
const SUPER_WORDS: usize = SUPER_BITS / 64;

struct ByteTables {
    min: [i8; 256],
    pos: [u8; 256],
    delta: [i8; 256],
}

const fn byte_tables() -> ByteTables {
    let mut t = ByteTables {
        min: [0; 256],
        pos: [0; 256],
        delta: [0; 256],
    };
    let mut v = 0;
    while v < 256 {
        let mut e: i8 = 0;
        let mut best: i8 = i8::MAX;
        let mut best_pos: u8 = 0;
        let mut i = 0;
        while i < 8 {
            e += if (v >> i) & 1 == 1 { 1 } else { -1 };
            if e <= best {
                best = e;
                best_pos = i as u8;
            }
            i += 1;
        }
        t.min[v] = best;
        t.pos[v] = best_pos;
        t.delta[v] = e;
        v += 1;
    }
    t
}

static TABLES: ByteTables = byte_tables();

/// Leftmost-argmin RMQ over an array that is discarded after construction.
#[derive(Clone, Debug)]
pub struct Rmq {
    len: usize,
    bp: BitVector,
    sb_min: Vec<u32>,
    sb_pos: Vec<u16>,
    /// Per 64-bit word: minimum excess relative to the excess before its
    /// superblock, and the offset of its rightmost occurrence in the word.
    word_min: Vec<i16>,
    word_pos: Vec<u8>,
    /// `sparse[k - 1][s]`: superblock of the rightmost minimum over `[s, s + 2^k)`.
    sparse: Vec<PackedInts>,
    /// Elements never popped, i.e. `A[k] <= min A[k+1..]`.
    survivors: BitVector,
}

impl PartialEq for Rmq {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.bp == other.bp
    }
}

impl Eq for Rmq {}

impl Rmq {
    pub fn new<T: Ord + Copy>(values: &[T]) -> Self {
        let mut bp = BitVectorBuilder::new();
        let mut stack: Vec<T> = Vec::new();
        for &v in values {
            while stack.last().is_some_and(|&top| top > v) {
                stack.pop();
                bp.push(false);
            }
            stack.push(v);
            bp.push(true);
        }
        bp.push_run(false, stack.len());
        let rmq = Self::from_parens(values.len(), bp.build());
        #[cfg(debug_assertions)]
        if values.len() <= 48 {
            for l in 1..=values.len() {
                for r in l..=values.len() {
                    let k = rmq.argmin(l, r);
                    let naive = (l..=r).min_by_key(|&t| (values[t - 1], t)).unwrap();
                    debug_assert_eq!(k, naive, "rmq self-check failed on [{l}, {r}]");
                }
            }
        }
        rmq
    }

    fn from_parens(len: usize, bp: BitVector) -> Self {
        let nsb = bp.len().div_ceil(SUPER_BITS);
        let mut sb_min = Vec::with_capacity(nsb);
        let mut sb_pos = Vec::with_capacity(nsb);
        let nw = bp.len().div_ceil(64);
        let mut word_min = Vec::with_capacity(nw);
        let mut word_pos = Vec::with_capacity(nw);
        let mut e: i64 = 0;
        for s in 0..nsb {
            let start = s * SUPER_BITS + 1;
            let end = ((s + 1) * SUPER_BITS).min(bp.len());
            let base = e;
            let mut best = (i64::MAX, start);
            for ws in (start..=end).step_by(64) {
                let we = (ws + 63).min(end);
                let (m, p) = scan(&bp, e, ws, we);
                word_min.push((m - base) as i16);
                word_pos.push((p - ws) as u8);
                if m <= best.0 {
                    best = (m, p);
                }
                let ones = bp.rank1(we) - bp.rank1(ws - 1);
                e += 2 * ones as i64 - (we + 1 - ws) as i64;
            }
            sb_min.push(best.0 as u32);
            sb_pos.push((best.1 - start) as u16);
        }
        let width = bits_for(nsb.saturating_sub(1) as u64);
        let mut sparse: Vec<PackedInts> = Vec::new();
        let mut k = 1;
        while (1usize << k) <= nsb {
            let half = 1usize << (k - 1);
            let count = nsb + 1 - (1 << k);
            let mut level = PackedInts::with_width(width, count);
            for s in 0..count {
                let (a, b) = if k == 1 {
                    (s, s + 1)
                } else {
                    let prev = &sparse[k - 2];
                    (prev.get(s) as usize, prev.get(s + half) as usize)
                };
                let pick = if sb_min[b] <= sb_min[a] { b } else { a };
                level.set(s, pick as u64);
            }
            sparse.push(level);
            k += 1;
        }
        // The stack right after the last push holds exactly the survivors.
        let mut survivors = BitVectorBuilder::with_len(len);
        let mut stack = Vec::new();
        let mut next = 1;
        for p in 1..=bp.len() {
            if next > len {
                break;
            }
            if bp.get(p) {
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        for k in stack {
            survivors.set(k);
        }
        let survivors = survivors.build();
        Self {
            len,
            bp,
            sb_min,
            sb_pos,
            word_min,
            word_pos,
            sparse,
            survivors,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    fn excess(&self, p: usize) -> i64 {
        2 * self.bp.rank1(p) as i64 - p as i64
    }

    /// Rightmost minimum over the whole words `w1..=w2` of one superblock.
    #[inline]
    fn words_min(&self, w1: usize, w2: usize, best: &mut (i64, usize)) {
        if w1 > w2 {
            return;
        }
        let sb = w1 / SUPER_WORDS;
        let base = self.excess(sb * SUPER_BITS);
        for w in w1..=w2 {
            let m = base + i64::from(self.word_min[w]);
            if m <= best.0 {
                *best = (m, w * 64 + 1 + self.word_pos[w] as usize);
            }
        }
    }

    /// Rightmost minimum over the whole superblocks `s1..=s2`.
    #[inline]
    fn supers_min(&self, s1: usize, s2: usize, best: &mut (i64, usize)) {
        if s1 > s2 {
            return;
        }
        let mid = if s1 == s2 {
            s1
        } else {
            let k = (s2 - s1 + 1).ilog2() as usize;
            let c1 = self.sparse[k - 1].get(s1) as usize;
            let c2 = self.sparse[k - 1].get(s2 + 1 - (1 << k)) as usize;
            if self.sb_min[c2] <= self.sb_min[c1] {
                c2
            } else {
                c1
            }
        };
        let m = i64::from(self.sb_min[mid]);
        if m <= best.0 {
            *best = (m, mid * SUPER_BITS + 1 + self.sb_pos[mid] as usize);
        }
    }

    /// Rightmost minimum of the excess over positions `[x, y]`.
    fn rightmost_min(&self, x: usize, y: usize) -> (i64, usize) {
        let wx = (x - 1) / 64;
        let wy = (y - 1) / 64;
        if wy <= wx + 1 {
            return scan(&self.bp, self.excess(x - 1), x, y);
        }
        let mut best = scan(&self.bp, self.excess(x - 1), x, (wx + 1) * 64);
        let (w1, w2) = (wx + 1, wy - 1);
        let (s1, s2) = (w1 / SUPER_WORDS, w2 / SUPER_WORDS);
        if s1 == s2 {
            self.words_min(w1, w2, &mut best);
        } else {
            self.words_min(w1, (s1 + 1) * SUPER_WORDS - 1, &mut best);
            self.supers_min(s1 + 1, s2 - 1, &mut best);
            self.words_min(s2 * SUPER_WORDS, w2, &mut best);
        }
        let right = scan(&self.bp, self.excess(wy * 64), wy * 64 + 1, y);
        if right.0 <= best.0 {
            best = right;
        }
        best
    }

    /// Leftmost position of a minimum of `A[l..=r]` (1-based, inclusive).
    #[inline]
    pub fn argmin(&self, l: usize, r: usize) -> usize {
        assert!(
            1 <= l && l <= r && r <= self.len,
            "rmq range [{l}, {r}] outside [1, {}]",
            self.len
        );
        if l == r {
            return l;
        }
        if r == self.len {
            return self.suffix_argmin(l);
        }
        let x = self.bp.select1(l).unwrap();
        let y = self.bp.select1(r).unwrap();
        let (min, w) = self.rightmost_min(x, y);
        if min >= self.excess(x) {
            l
        } else {
            self.bp.rank1(w + 1)
        }
    }

    /// Leftmost argmin of `A[l..]`: one rank and one select.
    #[inline]
    pub fn suffix_argmin(&self, l: usize) -> usize {
        let p = l - 1;
        let rest = self.survivors.words()[p / 64] >> (p % 64);
        if rest != 0 {
            return l + rest.trailing_zeros() as usize;
        }
        let r = self.survivors.rank1(l - 1);
        self.survivors
            .select1(r + 1)
            .expect("last element survives")
    }

    /// Checked variant of [`Rmq::argmin`].
    pub fn try_argmin(&self, l: usize, r: usize) -> Result<usize> {
        if l == 0 || l > r || r > self.len {
            return Err(Error::IndexOutOfRange {
                index: if l == 0 || l > r { l } else { r },
                limit: self.len,
            });
        }
        Ok(self.argmin(l, r))
    }

    pub fn size_in_bytes(&self) -> usize {
        self.bp.size_in_bytes()
            + self.sb_min.len() * 4
            + self.sb_pos.len() * 2
            + self.word_min.len() * 3
            + self.survivors.size_in_bytes()
            + self
                .sparse
                .iter()
                .map(PackedInts::size_in_bytes)
                .sum::<usize>()
    }

    pub fn write_to(&self, w: &mut ByteWriter) {
        w.put_usize(self.len);
        self.bp.write_to(w);
    }

    pub fn read_from(r: &mut ByteReader<'_>) -> Result<Self> {
        let len = r.usize()?;
        let bp = BitVector::read_from(r)?;
        if bp.len() != 2 * len || bp.count_ones() != len {
            return Err(Error::Malformed(format!(
                "rmq parentheses of length {} for {len} elements",
                bp.len()
            )));
        }
        Ok(Self::from_parens(len, bp))
    }
}

/// Rightmost minimum of the running excess over `[x, y]`, starting from
/// excess `e` before `x`. Returns `(i64::MAX, x)` for an empty range.
fn scan(bp: &BitVector, mut e: i64, x: usize, y: usize) -> (i64, usize) {
    let words = bp.words();
    let mut best = i64::MAX;
    let mut best_pos = x;
    let mut p = x;
    while p <= y && !(p - 1).is_multiple_of(8) {
        e += if bp.get(p) { 1 } else { -1 };
        if e <= best {
            best = e;
            best_pos = p;
        }
        p += 1;
    }
    while p + 7 <= y {
        let bit = p - 1;
        let byte = ((words[bit / 64] >> (bit % 64)) & 0xff) as usize;
        let m = e + i64::from(TABLES.min[byte]);
        if m <= best {
            best = m;
            best_pos = p + TABLES.pos[byte] as usize;
        }
        e += i64::from(TABLES.delta[byte]);
        p += 8;
    }
    while p <= y {
        e += if bp.get(p) { 1 } else { -1 };
        if e <= best {
            best = e;
            best_pos = p;
        }
        p += 1;
    }
    (best, best_pos)
}
