//! Linear-space index.
//!
//! FTR rows are not stored. Each row `v_1 <= ... <= v_n` is kept as the
//! unary bitvector `B_j` (`v_i - v_{i-1}` zeros, then a one) so that
//! `v_i = select1(i) - i`, and an RMQ over the discarded `PRE_j` recovers
//! argmin satellites. Positions that are multiples of the checkpoint period
//! `c` (and `n`) search their full column; every other position searches
//! only the first `t` depths. If that fails, the answer lies within 18 of
//! the checkpoint answer `m` at `b' = min(n, ⌈b/c⌉·c)`, and the window is
//! resolved with the fragment test: `m - 1` first, then a binary search
//! over the rest when that fails.

use crate::codec::{ByteReader, ByteWriter};
use crate::column::{BranchlessBinary, ColumnSearch};
use crate::error::{Error, Result};
use crate::fragments::FragmentLayer;
use crate::index::TextInfo;
use crate::occurrences::{witness_from_argmin, FtrSource, OccLayer};
use crate::succinct::{BitVector, BitVectorBuilder, Rmq};
use crate::text::{SawAnswer, Text};

/// Width of the window below the checkpoint answer.
pub const WINDOW: usize = 18;

/// One FTR row in unary, with the RMQ and fragments of its word length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearLayer {
    j: usize,
    n: usize,
    bj: BitVector,
    rmq: Rmq,
    frags: FragmentLayer,
}

impl LinearLayer {
    fn build(text: &Text, j: usize) -> Self {
        let n = text.len();
        let occ = OccLayer::for_length(text, j).expect("j below lambda");
        let minima = occ.suffix_minima();
        let frags = FragmentLayer::from_minima(j, n, occ.pre(), &minima);
        let mut bits = BitVectorBuilder::new();
        let mut prev = 0;
        for i in 1..=n {
            let v = minima[OccLayer::window_start(j, i) - 1].0 as usize;
            bits.push_run(false, v - prev);
            bits.push(true);
            prev = v;
        }
        let (_pre, rmq) = occ.into_parts();
        Self {
            j,
            n,
            bj: bits.build(),
            rmq,
            frags,
        }
    }

    pub fn bits(&self) -> &BitVector {
        &self.bj
    }

    pub fn fragments(&self) -> &FragmentLayer {
        &self.frags
    }

    /// `FTR[j][i]` decoded from `B_j`.
    #[inline]
    fn value(&self, i: usize) -> usize {
        self.bj.select1(i).map_or(0, |p| p - i)
    }

    #[inline]
    fn argmin(&self, i: usize) -> usize {
        self.rmq
            .argmin(OccLayer::window_start(self.j, i), self.rmq.len())
    }

    fn answer(&self, b: usize) -> Result<SawAnswer> {
        witness_from_argmin(self.j, self.n, self.value(b), self.argmin(b))
    }

    pub fn size_in_bytes(&self) -> usize {
        self.bj.size_in_bytes() + self.rmq.size_in_bytes() + self.frags.size_in_bytes()
    }

    fn write_to(&self, w: &mut ByteWriter) {
        w.section(|s| {
            s.put_usize(self.j);
            self.bj.write_to(s);
            self.rmq.write_to(s);
            self.frags.write_to(s);
        });
    }

    fn read_from(r: &mut ByteReader<'_>, n: usize) -> Result<Self> {
        let mut s = r.section()?;
        let j = s.usize()?;
        let bj = BitVector::read_from(&mut s)?;
        let rmq = Rmq::read_from(&mut s)?;
        let frags = FragmentLayer::read_from(&mut s)?;
        s.expect_end()?;
        let ok = bj.count_ones() == n
            && bj.len() <= 2 * n
            && rmq.len() > n
            && rmq.len() <= 2 * n
            && frags.j() == j
            && frags.starts().len() == n;
        if !ok {
            return Err(Error::Malformed(format!("inconsistent layer j = {j}")));
        }
        Ok(Self {
            j,
            n,
            bj,
            rmq,
            frags,
        })
    }
}

impl FtrSource for LinearLayer {
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
        Ok((self.value(i), self.argmin(i)))
    }
}

/// Which branch of the constant-time query produced the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryPath {
    /// Found within the first `t` depths at `b`.
    Truncated,
    /// Resolved in the window below the checkpoint answer `m`.
    Window { checkpoint: usize, m: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearIndex {
    info: TextInfo,
    period: usize,
    truncation: usize,
    layers: Vec<LinearLayer>,
}

/// `max(2, ⌊log2 log2 n⌋)`.
pub fn checkpoint_period(n: usize) -> usize {
    let log = (n.max(1) as f64).log2();
    if log <= 1.0 {
        return 2;
    }
    (log.log2().floor() as usize).max(2)
}

/// `min(λ - 1, ⌈log2 n / log2 log2 n⌉)`, or `λ - 1` when `log2 log2 n <= 0`.
pub fn truncation_depth(n: usize, lambda: usize) -> usize {
    let depth = lambda - 1;
    let log = (n.max(1) as f64).log2();
    let loglog = if log > 0.0 { log.log2() } else { 0.0 };
    if loglog <= 0.0 {
        return depth;
    }
    ((log / loglog).ceil() as usize).min(depth)
}

impl LinearIndex {
    pub fn build(text: &Text) -> Self {
        let info = TextInfo::from_text(text);
        let layers = (1..=info.depth())
            .map(|j| LinearLayer::build(text, j))
            .collect();
        Self {
            period: checkpoint_period(info.n),
            truncation: truncation_depth(info.n, info.lambda),
            info,
            layers,
        }
    }

    pub fn info(&self) -> &TextInfo {
        &self.info
    }

    pub fn lambda(&self) -> usize {
        self.info.lambda
    }

    pub fn checkpoint_period(&self) -> usize {
        self.period
    }

    pub fn truncation_depth(&self) -> usize {
        self.truncation
    }

    pub fn layer(&self, j: usize) -> Option<&LinearLayer> {
        self.layers.get(j.wrapping_sub(1))
    }

    /// `FTR[j][i]` as `select1(i, B_j) - i`.
    pub fn ftr_access(&self, j: usize, i: usize) -> Result<usize> {
        let layer = self.layer(j).ok_or(Error::LayerBeyondEll {
            j,
            lambda: self.info.lambda,
        })?;
        Ok(layer.ftr_value(i)?.0)
    }

    #[inline]
    fn v(&self, j: usize, i: usize) -> usize {
        self.layers[j - 1].value(i)
    }

    /// Constant-time query.
    pub fn query(&self, a: usize, b: usize) -> Result<SawAnswer> {
        self.query_traced(a, b).map(|(ans, _)| ans)
    }

    /// Like [`query`](Self::query), also reporting the branch taken.
    pub fn query_traced(&self, a: usize, b: usize) -> Result<(SawAnswer, QueryPath)> {
        self.info.check_range(a, b)?;
        let search = BranchlessBinary;
        if let Some(j) = search.first_below(self.truncation, a, |j| self.v(j, b)) {
            return Ok((self.layers[j - 1].answer(b)?, QueryPath::Truncated));
        }
        let n = self.info.n;
        let checkpoint = b.div_ceil(self.period).saturating_mul(self.period).min(n);
        // FTR grows with the position, so the answer at b is at most m; it
        // exceeds t, hence so does m and only deeper layers are searched.
        let t = self.truncation;
        let m = search
            .first_below(self.info.depth() - t, a, |j| self.v(t + j, checkpoint))
            .map_or(self.info.lambda, |j| t + j);
        let path = QueryPath::Window { checkpoint, m };
        // The answer is the smallest j in [lo, m) lacking a word, or m. It is
        // usually m itself, so the answer at m is read before the probe of
        // m - 1 (the two overlap in memory), and the rest of the window is
        // binary-searched only when that probe fails.
        let at_m = if m <= self.info.depth() {
            self.layers[m - 1].answer(b)?
        } else {
            self.info.global
        };
        let lo = (t + 1).max(m.saturating_sub(WINDOW));
        if lo < m && !self.layers[m - 2].frags.has_all(a, b)? {
            let (mut lo, mut hi) = (lo, m - 1);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                if self.layers[mid - 1].frags.has_all(a, b)? {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            let layer = &self.layers[hi - 1];
            return Ok((layer.frags.witness(layer, a, b)?, path));
        }
        Ok((at_m, path))
    }

    /// Query that also checks the window assumption against a binary
    /// search: the true length must lie in `[m - 18, m]`.
    pub fn query_checked(&self, a: usize, b: usize) -> Result<(SawAnswer, QueryPath)> {
        let (ans, path) = self.query_traced(a, b)?;
        let truth = self.query_loglog(a, b)?.len;
        if let QueryPath::Window { m, .. } = path {
            if truth > m || truth + WINDOW < m {
                return Err(Error::InternalInvariant(format!(
                    "answer {truth} for [{a}, {b}] outside window below checkpoint answer {m}"
                )));
            }
        }
        if ans.len != truth {
            return Err(Error::InternalInvariant(format!(
                "constant-time answer {} differs from binary search {truth} on [{a}, {b}]",
                ans.len
            )));
        }
        Ok((ans, path))
    }

    /// Binary search over word lengths with the fragment test:
    /// `O(log λ)` rank/select operations.
    pub fn query_loglog(&self, a: usize, b: usize) -> Result<SawAnswer> {
        self.info.check_range(a, b)?;
        // Smallest j in [lo, hi) lacking some word, hi = λ meaning none.
        let (mut lo, mut hi) = (1, self.info.lambda);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.layers[mid - 1].frags.has_all(a, b)? {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo == self.info.lambda {
            return Ok(self.info.global);
        }
        let layer = &self.layers[lo - 1];
        layer.frags.witness(layer, a, b)
    }

    pub fn size_in_bytes(&self) -> usize {
        self.layers.iter().map(LinearLayer::size_in_bytes).sum()
    }

    /// Test hook: flips bit `pos` of `B_j`.
    #[doc(hidden)]
    pub fn inject_fault(&mut self, j: usize, pos: usize) {
        self.layers[j - 1].bj.flip(pos);
    }

    pub(crate) fn write_body(&self, w: &mut ByteWriter) {
        w.put_usize(self.layers.len());
        for layer in &self.layers {
            layer.write_to(w);
        }
    }

    pub(crate) fn read_body(info: TextInfo, r: &mut ByteReader<'_>) -> Result<Self> {
        let count = r.usize()?;
        if count != info.depth() {
            return Err(Error::Malformed(format!(
                "{count} layers for lambda = {}",
                info.lambda
            )));
        }
        let layers = (0..count)
            .map(|_| LinearLayer::read_from(r, info.n))
            .collect::<Result<Vec<_>>>()?;
        if layers.iter().enumerate().any(|(k, l)| l.j != k + 1) {
            return Err(Error::Malformed("layers out of order".into()));
        }
        Ok(Self {
            period: checkpoint_period(info.n),
            truncation: truncation_depth(info.n, info.lambda),
            info,
            layers,
        })
    }
}
