//! Library side of the `isaw` command: token formats, batch queries,
//! verification and benchmarking.

pub mod bench;
pub mod query;
pub mod tokens;
pub mod verify;
