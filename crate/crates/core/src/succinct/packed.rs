use crate::codec::{ByteReader, ByteWriter};
use crate::error::{Error, Result};

/// Number of bits needed to store every value in `0..=max`.
pub fn bits_for(max: u64) -> u32 {
    (u64::BITS - max.leading_zeros()).max(1)
}

/// Fixed-width integer array packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedInts {
    width: u32,
    len: usize,
    words: Vec<u64>,
}

impl PackedInts {
    pub fn with_width(width: u32, len: usize) -> Self {
        assert!((1..=64).contains(&width), "width {width} out of range");
        let total = (width as usize) * len;
        Self {
            width,
            len,
            words: vec![0; total.div_ceil(64)],
        }
    }

    /// Packs `values` using the smallest width that fits their maximum.
    pub fn from_slice(values: &[u64]) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        let mut out = Self::with_width(bits_for(max), values.len());
        for (i, &v) in values.iter().enumerate() {
            out.set(i, v);
        }
        out
    }

    #[inline]
    fn mask(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    pub fn set(&mut self, i: usize, v: u64) {
        assert!(i < self.len);
        let mask = self.mask();
        assert!(v <= mask, "value {v} does not fit in {} bits", self.width);
        let bit = i * self.width as usize;
        let (w, off) = (bit / 64, bit % 64);
        self.words[w] = (self.words[w] & !(mask << off)) | (v << off);
        if off + self.width as usize > 64 {
            let spill = 64 - off;
            self.words[w + 1] = (self.words[w + 1] & !(mask >> spill)) | (v >> spill);
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let bit = i * self.width as usize;
        let (w, off) = (bit / 64, bit % 64);
        let mut v = self.words[w] >> off;
        if off + self.width as usize > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & self.mask()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn size_in_bytes(&self) -> usize {
        self.words.len() * 8
    }

    pub fn write_to(&self, w: &mut ByteWriter) {
        w.put_u32(self.width);
        w.put_usize(self.len);
        w.put_words(&self.words);
    }

    pub fn read_from(r: &mut ByteReader<'_>) -> Result<Self> {
        let width = r.u32()?;
        let len = r.usize()?;
        let words = r.words()?;
        if !(1..=64).contains(&width) {
            return Err(Error::Malformed(format!("packed width {width}")));
        }
        let needed = (width as usize)
            .checked_mul(len)
            .map(|b| b.div_ceil(64))
            .ok_or_else(|| Error::Malformed("packed length overflows".into()))?;
        if words.len() != needed {
            return Err(Error::Malformed(format!(
                "packed array needs {needed} words, found {}",
                words.len()
            )));
        }
        Ok(Self { width, len, words })
    }
}
