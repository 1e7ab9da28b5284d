//! Text metadata shared by both index kinds, and the on-disk index file.
//!
//! File layout, little-endian throughout:
//!
//! ```text
//! magic "ISAW" | version u32 | mode u32 | token format u32
//! n u64 | sigma u64 | lambda u64 | checksum u64
//! alphabet: count u64, then sigma u32 tokens
//! global answer: len u64, kind u32, start u64, end u64, letter u32
//! body: length-prefixed sections (mode specific)
//! ```

use crate::codec::{ByteReader, ByteWriter};
use crate::dense::DenseIndex;
use crate::error::{Error, Result};
use crate::linear::LinearIndex;
use crate::text::{SawAnswer, Text, Witness};

pub const MAGIC: &[u8; 4] = b"ISAW";
pub const FORMAT_VERSION: u32 = 1;

/// What the queries need to know about the indexed text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TextInfo {
    pub n: usize,
    pub sigma: usize,
    pub lambda: usize,
    pub global: SawAnswer,
    /// Original token of each letter `1..=sigma`.
    pub alphabet: Vec<u32>,
    pub checksum: u64,
}

impl TextInfo {
    pub fn from_text(text: &Text) -> Self {
        Self {
            n: text.len(),
            sigma: text.sigma(),
            lambda: text.lambda(),
            global: text.global_saw(),
            alphabet: text.alphabet().to_vec(),
            checksum: text.checksum(),
        }
    }

    /// Number of stored word lengths, `λ - 1`.
    #[inline]
    pub fn depth(&self) -> usize {
        self.lambda - 1
    }

    #[inline]
    pub fn check_range(&self, a: usize, b: usize) -> Result<()> {
        if a == 0 || a > b || b > self.n {
            Err(Error::RangeOutOfBounds { a, b, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Original token of letter `c`.
    pub fn token(&self, c: u32) -> u32 {
        self.alphabet[c as usize - 1]
    }

    fn write_to(&self, w: &mut ByteWriter) {
        w.put_usize(self.n);
        w.put_usize(self.sigma);
        w.put_usize(self.lambda);
        w.put_u64(self.checksum);
        w.put_usize(self.alphabet.len());
        for &t in &self.alphabet {
            w.put_u32(t);
        }
        w.put_usize(self.global.len);
        let (kind, start, end, letter) = match self.global.witness {
            Witness::Substring { start, end } => (0, start, end, 0),
            Witness::Extension { start, end, letter } => (1, start, end, letter),
        };
        w.put_u32(kind);
        w.put_usize(start);
        w.put_usize(end);
        w.put_u32(letter);
    }

    fn read_from(r: &mut ByteReader<'_>) -> Result<Self> {
        let n = r.usize()?;
        let sigma = r.usize()?;
        let lambda = r.usize()?;
        let checksum = r.u64()?;
        let count = r.usize()?;
        if count != sigma || sigma < 2 || n == 0 || lambda == 0 || lambda > n + 1 {
            return Err(Error::Malformed(format!(
                "inconsistent header: n = {n}, sigma = {sigma}, lambda = {lambda}, alphabet = {count}"
            )));
        }
        let alphabet = (0..count).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
        let len = r.usize()?;
        let kind = r.u32()?;
        let start = r.usize()?;
        let end = r.usize()?;
        let letter = r.u32()?;
        let witness = match kind {
            0 => Witness::Substring { start, end },
            1 => Witness::Extension { start, end, letter },
            k => return Err(Error::Malformed(format!("unknown witness kind {k}"))),
        };
        let global = SawAnswer { len, witness };
        if len != lambda || !global.is_well_formed(n, sigma) {
            return Err(Error::Malformed("bad global answer record".into()));
        }
        Ok(Self {
            n,
            sigma,
            lambda,
            global,
            alphabet,
            checksum,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Dense,
    Linear,
}

impl Mode {
    pub fn code(self) -> u32 {
        match self {
            Mode::Dense => 1,
            Mode::Linear => 2,
        }
    }

    pub fn from_code(code: u32) -> Result<Self> {
        match code {
            1 => Ok(Mode::Dense),
            2 => Ok(Mode::Linear),
            c => Err(Error::Malformed(format!("unknown index mode {c}"))),
        }
    }
}

/// Either index, as loaded from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyIndex {
    Dense(DenseIndex),
    Linear(LinearIndex),
}

impl AnyIndex {
    pub fn build(text: &Text, mode: Mode) -> Self {
        match mode {
            Mode::Dense => AnyIndex::Dense(DenseIndex::build(text)),
            Mode::Linear => AnyIndex::Linear(LinearIndex::build(text)),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            AnyIndex::Dense(_) => Mode::Dense,
            AnyIndex::Linear(_) => Mode::Linear,
        }
    }

    pub fn info(&self) -> &TextInfo {
        match self {
            AnyIndex::Dense(d) => d.info(),
            AnyIndex::Linear(l) => l.info(),
        }
    }

    /// Constant-time query of either kind.
    pub fn query(&self, a: usize, b: usize) -> Result<SawAnswer> {
        match self {
            AnyIndex::Dense(d) => d.query(a, b),
            AnyIndex::Linear(l) => l.query(a, b),
        }
    }

    pub fn size_in_bytes(&self) -> usize {
        match self {
            AnyIndex::Dense(d) => d.size_in_bytes(),
            AnyIndex::Linear(l) => l.size_in_bytes(),
        }
    }

    /// Serializes with an opaque `token_format` tag the caller can use to
    /// re-read the text later.
    pub fn to_bytes(&self, token_format: u32) -> Vec<u8> {
        let mut w = ByteWriter::new();
        w.put_bytes(MAGIC);
        w.put_u32(FORMAT_VERSION);
        w.put_u32(self.mode().code());
        w.put_u32(token_format);
        self.info().write_to(&mut w);
        match self {
            AnyIndex::Dense(d) => d.write_body(&mut w),
            AnyIndex::Linear(l) => l.write_body(&mut w),
        }
        w.into_bytes()
    }

    /// Parses an index file, returning it with its token format tag.
    pub fn from_bytes(bytes: &[u8]) -> Result<(Self, u32)> {
        let mut r = ByteReader::new(bytes);
        if r.bytes(4).map_err(|_| Error::BadMagic)? != MAGIC {
            return Err(Error::BadMagic);
        }
        let version = r.u32()?;
        if version != FORMAT_VERSION {
            return Err(Error::UnsupportedVersion(version));
        }
        let mode = Mode::from_code(r.u32()?)?;
        let token_format = r.u32()?;
        let info = TextInfo::read_from(&mut r)?;
        let idx = match mode {
            Mode::Dense => AnyIndex::Dense(DenseIndex::read_body(info, &mut r)?),
            Mode::Linear => AnyIndex::Linear(LinearIndex::read_body(info, &mut r)?),
        };
        r.expect_end()?;
        Ok((idx, token_format))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{random_text, running};
    use rand::{rngs::StdRng, Rng, SeedableRng};

    #[test]
    fn round_trip_both_modes() {
        let mut rng = StdRng::seed_from_u64(5);
        let texts = [
            running(),
            random_text(&mut rng, 3000, 3),
            Text::from_bytes(b"aaaa", Some(2)).unwrap(),
        ];
        for t in &texts {
            for mode in [Mode::Dense, Mode::Linear] {
                let idx = AnyIndex::build(t, mode);
                let bytes = idx.to_bytes(7);
                let (back, fmt) = AnyIndex::from_bytes(&bytes).unwrap();
                assert_eq!(fmt, 7);
                assert_eq!(back, idx);
                let n = t.len();
                for _ in 0..500 {
                    let a = rng.gen_range(1..=n);
                    let b = rng.gen_range(a..=n);
                    assert_eq!(back.query(a, b), idx.query(a, b));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_files() {
        let idx = AnyIndex::build(&running(), Mode::Linear);
        let bytes = idx.to_bytes(0);
        assert_eq!(AnyIndex::from_bytes(b"NOPE").unwrap_err(), Error::BadMagic);
        assert_eq!(AnyIndex::from_bytes(b"IS").unwrap_err(), Error::BadMagic);
        let mut v = bytes.clone();
        v[4] = 9;
        assert_eq!(
            AnyIndex::from_bytes(&v).unwrap_err(),
            Error::UnsupportedVersion(9)
        );
        let mut v = bytes.clone();
        v[8] = 3;
        assert!(matches!(AnyIndex::from_bytes(&v), Err(Error::Malformed(_))));
        for cut in [20, bytes.len() / 2, bytes.len() - 1] {
            assert!(AnyIndex::from_bytes(&bytes[..cut]).is_err());
        }
        let mut v = bytes;
        v.push(0);
        assert!(AnyIndex::from_bytes(&v).is_err());
    }
}
