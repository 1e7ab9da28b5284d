//! Shortest absent words of text fragments.
//!
//! Given a text `T` of length `n` over an alphabet of size `σ`, the indexes
//! here answer "what is a shortest word over the alphabet that does not
//! occur in `T[a..b]`?" for arbitrary ranges. [`DenseIndex`] stores the
//! full FTR table; [`LinearIndex`] keeps `O(n)` words and also offers a
//! binary-search query. [`oracle`] holds brute-force references.

pub mod codec;
pub mod column;
pub mod dense;
pub mod error;
pub mod fragments;
pub mod index;
pub mod linear;
pub mod occurrences;
pub mod oracle;
pub mod succinct;
#[cfg(test)]
mod testing;
pub mod text;

pub use dense::DenseIndex;
pub use error::{Error, Result};
pub use index::{AnyIndex, Mode, TextInfo};
pub use linear::{LinearIndex, QueryPath};
pub use text::{Letter, RankArray, SawAnswer, Text, Witness};
