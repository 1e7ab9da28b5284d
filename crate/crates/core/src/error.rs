use thiserror::Error;

/// Errors raised while building, querying, or (de)serializing an index.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input text is empty")]
    EmptyInput,
    #[error("alphabet would have a single letter; pass an explicit sigma >= 2")]
    UnaryAlphabet,
    #[error("sigma {sigma} is smaller than the {distinct} distinct tokens (or below 2)")]
    SigmaTooSmall { sigma: usize, distinct: usize },
    #[error("cannot synthesize {missing} extra letters above token {max_token}")]
    AlphabetOverflow { max_token: u32, missing: usize },
    #[error("word length {j} outside [1, {n}]")]
    LengthOutOfRange { j: usize, n: usize },
    #[error("lexicographic ranks of length-{j} words overflow 64 bits for sigma {sigma}")]
    RankOverflow { j: usize, sigma: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("fewer than {k} {bit}-bits present")]
    NotFound { bit: u8, k: usize },
    #[error("range [{a}, {b}] is not within [1, {n}] with a <= b")]
    RangeOutOfBounds { a: usize, b: usize, n: usize },
    #[error("layer j = {j} requested but layers exist only below lambda = {lambda}")]
    LayerBeyondEll { j: usize, lambda: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("oracle window of length {len} exceeds the limit of {limit}")]
    WindowTooLarge { len: usize, limit: usize },
    #[error("extension bound violated: {0}")]
    BoundViolated(String),
    #[error("not an index file (bad magic)")]
    BadMagic,
    #[error("unsupported index format version {0}")]
    UnsupportedVersion(u32),
    #[error("malformed index file: {0}")]
    Malformed(String),
    #[error("text checksum {found:#018x} does not match index checksum {expected:#018x}")]
    ChecksumMismatch { expected: u64, found: u64 },
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
