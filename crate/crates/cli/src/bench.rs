//! Query latency and space across text prefixes.

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use clap::ValueEnum;
use isaw_core::{DenseIndex, LinearIndex, Text};
use rand::{rngs::StdRng, Rng, SeedableRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchMode {
    Dense,
    Linear,
    Loglog,
}

impl BenchMode {
    fn name(self) -> &'static str {
        match self {
            BenchMode::Dense => "dense",
            BenchMode::Linear => "linear",
            BenchMode::Loglog => "loglog",
        }
    }
}

pub const HEADER: &str = "mode\tn\tqueries\tmedian_ns\tp99_ns\tbytes_per_char";

/// Powers of two from 1024 (or `n` if smaller) up to `n`, plus `n` itself.
pub fn prefix_lengths(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut len = 1024.min(n);
    while len < n {
        out.push(len);
        len *= 2;
    }
    out.push(n);
    out
}

pub fn random_ranges(rng: &mut StdRng, n: usize, count: usize) -> Vec<(usize, usize)> {
    (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            (a, rng.gen_range(a..=n))
        })
        .collect()
}

/// Median and 99th percentile of per-call latency in nanoseconds.
pub fn latency(ranges: &[(usize, usize)], mut f: impl FnMut(usize, usize)) -> (u64, u64) {
    if ranges.is_empty() {
        return (0, 0);
    }
    let mut samples: Vec<u64> = ranges
        .iter()
        .map(|&(a, b)| {
            let start = Instant::now();
            f(black_box(a), black_box(b));
            start.elapsed().as_nanos() as u64
        })
        .collect();
    samples.sort_unstable();
    let at = |q: f64| samples[((samples.len() - 1) as f64 * q).round() as usize];
    (at(0.5), at(0.99))
}

pub fn run(
    text: &Text,
    modes: &[BenchMode],
    queries: usize,
    seed: u64,
    out: &mut impl Write,
) -> Result<()> {
    writeln!(out, "{HEADER}")?;
    if queries == 0 {
        return Ok(());
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for len in prefix_lengths(text.len()) {
        let prefix = Text::from_codes(text.codes()[..len].to_vec(), text.sigma())?;
        let ranges = random_ranges(&mut rng, len, queries);
        let dense = modes
            .contains(&BenchMode::Dense)
            .then(|| DenseIndex::build(&prefix));
        let linear = modes
            .iter()
            .any(|&m| m != BenchMode::Dense)
            .then(|| LinearIndex::build(&prefix));
        for &mode in modes {
            let (stats, bytes) = match mode {
                BenchMode::Dense => {
                    let d = dense.as_ref().unwrap();
                    let s = latency(&ranges, |a, b| {
                        black_box(d.query(a, b).unwrap());
                    });
                    (s, d.size_in_bytes())
                }
                BenchMode::Linear => {
                    let l = linear.as_ref().unwrap();
                    let s = latency(&ranges, |a, b| {
                        black_box(l.query(a, b).unwrap());
                    });
                    (s, l.size_in_bytes())
                }
                BenchMode::Loglog => {
                    let l = linear.as_ref().unwrap();
                    let s = latency(&ranges, |a, b| {
                        black_box(l.query_loglog(a, b).unwrap());
                    });
                    (s, l.size_in_bytes())
                }
            };
            writeln!(
                out,
                "{}\t{len}\t{queries}\t{}\t{}\t{:.3}",
                mode.name(),
                stats.0,
                stats.1,
                bytes as f64 / len as f64
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefixes() {
        assert_eq!(prefix_lengths(18), vec![18]);
        assert_eq!(prefix_lengths(4096), vec![1024, 2048, 4096]);
        assert_eq!(prefix_lengths(5000), vec![1024, 2048, 4096, 5000]);
    }

    #[test]
    fn header_only_without_queries() {
        let t = Text::from_bytes(b"abaabaaabbabbbaaab", None).unwrap();
        let mut out = Vec::new();
        run(&t, &[BenchMode::Linear], 0, 1, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), format!("{HEADER}\n"));
    }

    #[test]
    fn table_rows() {
        let t = Text::from_bytes(b"abaabaaabbabbbaaab", None).unwrap();
        let mut out = Vec::new();
        run(&t, &[BenchMode::Dense, BenchMode::Loglog], 10, 1, &mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        let rows: Vec<&str> = s.lines().collect();
        assert_eq!(rows.len(), 3);
        assert!(rows[1].starts_with("dense\t18\t10\t"));
        assert!(rows[2].starts_with("loglog\t18\t10\t"));
    }
}
