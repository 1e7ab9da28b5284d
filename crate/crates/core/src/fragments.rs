//! Minimal order-`j` fragments.
//!
//! A fragment is of order `j` when it contains every length-`j` word, and
//! minimal when trimming either end loses that. Minimal fragments are not
//! nested, so their starts and ends are both strictly increasing and the
//! `k`-th set bit of `SP_j` pairs with the `k`-th set bit of `EP_j`. A range
//! contains all length-`j` words iff it contains a minimal fragment, which
//! is one rank and one select away.

use crate::codec::{ByteReader, ByteWriter};
use crate::error::{Error, Result};
use crate::occurrences::{witness_from_argmin, FtrSource, OccLayer};
use crate::succinct::{BitVector, BitVectorBuilder};
use crate::text::SawAnswer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentLayer {
    j: usize,
    sp: BitVector,
    ep: BitVector,
}

impl FragmentLayer {
    pub fn build(layer: &OccLayer, n: usize) -> Self {
        Self::from_minima(layer.j(), n, layer.pre(), &layer.suffix_minima())
    }

    /// Right-to-left rule: `b` ends a minimal fragment starting at
    /// `a = min PRE_j[b-j+2..]` exactly when `PRE_j[b-j+1] < a`.
    pub(crate) fn from_minima(j: usize, n: usize, pre: &[u32], minima: &[(u32, u32)]) -> Self {
        let mut sp = BitVectorBuilder::with_len(n);
        let mut ep = BitVectorBuilder::with_len(n);
        for b in (j..=n).rev() {
            let a = minima[b + 1 - j].0;
            if pre[b - j] < a {
                ep.set(b);
                sp.set(a as usize);
            }
        }
        let out = Self {
            j,
            sp: sp.build(),
            ep: ep.build(),
        };
        debug_assert_eq!(out.sp.count_ones(), out.ep.count_ones());
        out
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn starts(&self) -> &BitVector {
        &self.sp
    }

    pub fn ends(&self) -> &BitVector {
        &self.ep
    }

    pub fn len(&self) -> usize {
        self.sp.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All minimal fragments `(start, end)` in order.
    pub fn fragments(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .map(|k| (self.sp.select1(k).unwrap(), self.ep.select1(k).unwrap()))
            .collect()
    }

    /// Leftmost minimal fragment starting at or after `a`.
    #[inline]
    pub fn first_at_or_after(&self, a: usize) -> Option<(usize, usize)> {
        let t = self.sp.rank1(a - 1) + 1;
        Some((self.sp.select1(t)?, self.ep.select1(t)?))
    }

    fn check_range(&self, a: usize, b: usize) -> Result<()> {
        let n = self.sp.len();
        if a == 0 || a > b || b > n {
            Err(Error::RangeOutOfBounds { a, b, n })
        } else {
            Ok(())
        }
    }

    /// Whether `T[a..b]` contains every length-`j` word.
    #[inline]
    pub fn has_all(&self, a: usize, b: usize) -> Result<bool> {
        self.check_range(a, b)?;
        let t = self.sp.rank1(a - 1) + 1;
        Ok(self.ep.select1(t).is_some_and(|e| e <= b))
    }

    /// A length-`j` word absent from `T[a..b]`, assuming one exists: the
    /// length-`j` suffix of the leftmost minimal fragment starting at or
    /// after `a`, or, when no fragment starts there, the FTR witness at `b`.
    pub fn witness(&self, src: &impl FtrSource, a: usize, b: usize) -> Result<SawAnswer> {
        self.check_range(a, b)?;
        match self.first_at_or_after(a) {
            Some((_, e)) => Ok(SawAnswer::substring(e + 1 - self.j, e)),
            None => {
                let (value, k) = src.ftr_value(b)?;
                if value >= a {
                    return Err(Error::InternalInvariant(format!(
                        "no length-{} word is absent from [{a}, {b}]",
                        self.j
                    )));
                }
                witness_from_argmin(self.j, src.text_len(), value, k)
            }
        }
    }

    pub fn size_in_bytes(&self) -> usize {
        self.sp.size_in_bytes() + self.ep.size_in_bytes()
    }

    pub fn write_to(&self, w: &mut ByteWriter) {
        w.put_usize(self.j);
        self.sp.write_to(w);
        self.ep.write_to(w);
    }

    pub fn read_from(r: &mut ByteReader<'_>) -> Result<Self> {
        let j = r.usize()?;
        let sp = BitVector::read_from(r)?;
        let ep = BitVector::read_from(r)?;
        if sp.len() != ep.len() || sp.count_ones() != ep.count_ones() {
            return Err(Error::Malformed("unpaired fragment bitvectors".into()));
        }
        Ok(Self { j, sp, ep })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{all_small_texts, naive_covers, running, word_occurs};
    use crate::text::Text;

    fn layers(t: &Text) -> Vec<(OccLayer, FragmentLayer)> {
        (1..t.lambda())
            .map(|j| {
                let occ = OccLayer::for_length(t, j).unwrap();
                let frag = FragmentLayer::build(&occ, t.len());
                (occ, frag)
            })
            .collect()
    }

    #[test]
    fn running_example_bits() {
        let t = running();
        let (occ, frag) = &layers(&t)[1];
        let set = |bv: &BitVector| (1..=bv.len()).filter(|&p| bv.get(p)).collect::<Vec<_>>();
        assert_eq!(set(frag.starts()), vec![5, 7, 11, 13]);
        assert_eq!(set(frag.ends()), vec![10, 11, 16, 18]);
        assert_eq!(frag.fragments()[3], (13, 18));
        assert_eq!(
            SawAnswer::substring(13, 18).word(t.codes()).unwrap(),
            vec![2, 2, 1, 1, 1, 2]
        );
        assert!(frag.has_all(5, 14).unwrap());
        assert!(!frag.has_all(2, 7).unwrap());
        assert!(frag.has_all(7, 11).unwrap());
        assert_eq!(frag.has_all(7, 11).unwrap(), occ.covers_all(7, 11).unwrap());
        let w = frag.witness(occ, 2, 7).unwrap();
        assert_eq!(w, SawAnswer::substring(9, 10));
        assert_eq!(w.word(t.codes()).unwrap(), vec![2, 2]);
    }

    #[test]
    fn whole_text_is_the_fragment() {
        let t = Text::from_bytes(b"ab", Some(2)).unwrap();
        let (occ, frag) = &layers(&t)[0];
        assert_eq!(frag.fragments(), vec![(1, 2)]);
        let w = frag.witness(occ, 2, 2).unwrap();
        assert_eq!(w.word(t.codes()).unwrap(), vec![1]);
        assert!(frag.has_all(0, 1).is_err());
    }

    /// For every end `e`, the largest covering start; kept when neither
    /// one-letter shrink still covers.
    fn brute_force_fragments(t: &Text, j: usize) -> Vec<(usize, usize)> {
        let n = t.len();
        let mut out = Vec::new();
        for e in 1..=n {
            if let Some(s) = (1..=e).rev().find(|&s| naive_covers(t, j, s, e)) {
                let left = s < e && naive_covers(t, j, s + 1, e);
                let right = s < e && naive_covers(t, j, s, e - 1);
                if !left && !right {
                    out.push((s, e));
                }
            }
        }
        out
    }

    #[test]
    fn fragments_match_brute_force_and_fact8() {
        for t in all_small_texts() {
            let n = t.len();
            let ls = layers(&t);
            for (idx, (occ, frag)) in ls.iter().enumerate() {
                let j = idx + 1;
                let frs = frag.fragments();
                assert_eq!(frs, brute_force_fragments(&t, j));
                assert!(frs.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));
                assert!(frs.iter().all(|&(s, e)| e + 1 - s >= j));
                for a in 1..=n {
                    for b in a..=n {
                        let has = frag.has_all(a, b).unwrap();
                        assert_eq!(has, occ.covers_all(a, b).unwrap());
                        if let Some((_, next)) = ls.get(idx + 1) {
                            assert!(!next.has_all(a, b).unwrap() || has);
                        }
                        if !has {
                            let w = frag.witness(occ, a, b).unwrap();
                            assert_eq!(w.len, j);
                            let word = w.word(t.codes()).unwrap();
                            assert!(!word_occurs(&t.codes()[a - 1..b], &word), "[{a},{b}] j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn round_trip() {
        let t = running();
        let (_, frag) = &layers(&t)[1];
        let mut w = ByteWriter::new();
        frag.write_to(&mut w);
        let bytes = w.into_bytes();
        let back = FragmentLayer::read_from(&mut ByteReader::new(&bytes)).unwrap();
        assert_eq!(&back, frag);
    }
}
