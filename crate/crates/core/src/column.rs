//! Predecessor search over a per-position column of FTR values.
//!
//! A column `FTR[1..=d][b]` is non-increasing in the depth, so "smallest
//! depth whose value is below `a`" is a predecessor query on a sorted array
//! of at most `d <= 64` keys. The searches below read keys through a
//! closure so the column may be stored or decoded on demand.

/// Finds the smallest `j` in `[1, depth]` with `key(j) < a`, assuming `key`
/// is non-increasing.
pub trait ColumnSearch {
    fn first_below(&self, depth: usize, a: usize, key: impl Fn(usize) -> usize) -> Option<usize>;
}

/// Binary search without data-dependent branches: the loop runs
/// `ceil(log2(depth))` times regardless of the keys.
#[derive(Clone, Copy, Debug, Default)]
pub struct BranchlessBinary;

impl ColumnSearch for BranchlessBinary {
    #[inline]
    fn first_below(&self, depth: usize, a: usize, key: impl Fn(usize) -> usize) -> Option<usize> {
        if depth == 0 {
            return None;
        }
        let mut base = 0;
        let mut size = depth;
        while size > 1 {
            let half = size / 2;
            let mid = base + half;
            base = if key(mid) < a { base } else { mid };
            size -= half;
        }
        let cand = base + 1;
        (key(cand) < a).then_some(cand)
    }
}

/// Ascending scan; the reference the binary search is checked against.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinearScan;

impl ColumnSearch for LinearScan {
    fn first_below(&self, depth: usize, a: usize, key: impl Fn(usize) -> usize) -> Option<usize> {
        (1..=depth).find(|&j| key(j) < a)
    }
}
