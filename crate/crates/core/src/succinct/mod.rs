//! Succinct building blocks: rank/select bitvectors, fixed-width packed
//! integers, and range-minimum queries that do not retain their input.

mod bitvec;
mod packed;
mod rmq;

pub use bitvec::{BitVector, BitVectorBuilder};
pub use packed::{bits_for, PackedInts};
pub use rmq::Rmq;
