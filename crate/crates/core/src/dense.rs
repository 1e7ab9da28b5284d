//! Index with explicit FTR columns: `O(n log_σ n)` words, constant query.
//!
//! For every position `b` the column `FTR[1..λ-1][b]` is stored together
//! with the argmin satellites; a query is one predecessor search over the
//! column followed by a witness lookup.

use crate::codec::{ByteReader, ByteWriter};
use crate::column::{BranchlessBinary, ColumnSearch};
use crate::error::{Error, Result};
use crate::index::TextInfo;
use crate::occurrences::{witness_from_argmin, OccLayer};
use crate::succinct::{bits_for, PackedInts};
use crate::text::{SawAnswer, Text};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseIndex {
    info: TextInfo,
    /// Column-major: entry `(j, i)` lives at `(i - 1) * depth + (j - 1)`.
    ftr: PackedInts,
    sat: PackedInts,
}

impl DenseIndex {
    pub fn build(text: &Text) -> Self {
        let info = TextInfo::from_text(text);
        let n = info.n;
        let depth = info.depth();
        let mut ftr = PackedInts::with_width(bits_for(n as u64), n * depth);
        let mut sat = PackedInts::with_width(bits_for(2 * n as u64), n * depth);
        for j in 1..=depth {
            let layer = OccLayer::for_length(text, j).expect("j below lambda");
            let minima = layer.suffix_minima();
            for i in 1..=n {
                let (v, k) = minima[OccLayer::window_start(j, i) - 1];
                let slot = (i - 1) * depth + (j - 1);
                ftr.set(slot, u64::from(v));
                sat.set(slot, u64::from(k));
            }
        }
        Self { info, ftr, sat }
    }

    pub fn info(&self) -> &TextInfo {
        &self.info
    }

    pub fn lambda(&self) -> usize {
        self.info.lambda
    }

    /// `FTR[j][i]`.
    #[inline]
    pub fn ftr(&self, j: usize, i: usize) -> usize {
        self.ftr.get((i - 1) * self.info.depth() + (j - 1)) as usize
    }

    /// Leftmost `PRE_j` index attaining `FTR[j][i]`.
    #[inline]
    pub fn sat(&self, j: usize, i: usize) -> usize {
        self.sat.get((i - 1) * self.info.depth() + (j - 1)) as usize
    }

    pub fn column(&self, i: usize) -> Vec<usize> {
        (1..=self.info.depth()).map(|j| self.ftr(j, i)).collect()
    }

    pub fn query(&self, a: usize, b: usize) -> Result<SawAnswer> {
        self.query_with(&BranchlessBinary, a, b)
    }

    pub fn query_with(&self, search: &impl ColumnSearch, a: usize, b: usize) -> Result<SawAnswer> {
        self.info.check_range(a, b)?;
        match search.first_below(self.info.depth(), a, |j| self.ftr(j, b)) {
            None => Ok(self.info.global),
            Some(j) => witness_from_argmin(j, self.info.n, self.ftr(j, b), self.sat(j, b)),
        }
    }

    pub fn size_in_bytes(&self) -> usize {
        self.ftr.size_in_bytes() + self.sat.size_in_bytes()
    }

    pub(crate) fn write_body(&self, w: &mut ByteWriter) {
        w.section(|s| {
            self.ftr.write_to(s);
            self.sat.write_to(s);
        });
    }

    pub(crate) fn read_body(info: TextInfo, r: &mut ByteReader<'_>) -> Result<Self> {
        let mut s = r.section()?;
        let ftr = PackedInts::read_from(&mut s)?;
        let sat = PackedInts::read_from(&mut s)?;
        s.expect_end()?;
        let cells = info.n * info.depth();
        if ftr.len() != cells || sat.len() != cells {
            return Err(Error::Malformed(format!(
                "dense tables hold {} / {} cells, expected {cells}",
                ftr.len(),
                sat.len()
            )));
        }
        Ok(Self { info, ftr, sat })
    }
}
