//! Randomized verification of every query path against the oracle.

use std::fmt;

use isaw_core::oracle::{check_extension_bounds, oracle_saw, MAX_WINDOW};
use isaw_core::{DenseIndex, LinearIndex, QueryPath, SawAnswer, Text};
use rand::{rngs::StdRng, Rng, SeedableRng};
use rayon::prelude::*;

pub const RUNNING: &[u8] = b"abaabaaabbabbbaaab";

/// Ranges sampled per text when it is too long for exhaustive checking.
const SAMPLED_RANGES: usize = 2000;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    /// Flip one bit of `B_1` in every linear index (negative control).
    pub inject_fault: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub label: String,
    pub a: usize,
    pub b: usize,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL\t{}\t{}\t{}\t{}",
            self.label, self.a, self.b, self.detail
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub texts: usize,
    pub ranges: usize,
    pub lemma_pairs: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Printable form of a text for failure reports.
fn label(text: &Text) -> String {
    if text.len() > 200 {
        return format!("<n={}>", text.len());
    }
    text.codes()
        .iter()
        .map(|&c| {
            let t = text.decode(c);
            match char::from_u32(t) {
                Some(ch) if ch.is_ascii_graphic() => ch.to_string(),
                _ => char::from(b'a' + (c as u8 - 1) % 26).to_string(),
            }
        })
        .collect()
}

fn check_answer(
    text: &Text,
    a: usize,
    b: usize,
    what: &str,
    ans: &SawAnswer,
) -> Result<(), String> {
    let truth = oracle_saw(text, a, b).map_err(|e| e.to_string())?;
    if ans.len != truth.length {
        return Err(format!(
            "{what}: length {} expected {}",
            ans.len, truth.length
        ));
    }
    let word = ans
        .word(text.codes())
        .ok_or_else(|| format!("{what}: malformed witness {ans:?}"))?;
    if !truth.validate(&word, text.sigma()) {
        return Err(format!("{what}: witness {word:?} occurs in the range"));
    }
    Ok(())
}

fn check_range(
    text: &Text,
    dense: &DenseIndex,
    linear: &LinearIndex,
    a: usize,
    b: usize,
) -> Result<(), String> {
    let ans = dense.query(a, b).map_err(|e| format!("dense: {e}"))?;
    check_answer(text, a, b, "dense", &ans)?;
    let (ans, path) = linear
        .query_traced(a, b)
        .map_err(|e| format!("linear: {e}"))?;
    check_answer(text, a, b, "linear", &ans)?;
    if let QueryPath::Window { m, .. } = path {
        let truth = oracle_saw(text, a, b).map_err(|e| e.to_string())?.length;
        if truth > m || truth + isaw_core::linear::WINDOW < m {
            return Err(format!("window: answer {truth} outside [{m}-18, {m}]"));
        }
    }
    let ans = linear
        .query_loglog(a, b)
        .map_err(|e| format!("loglog: {e}"))?;
    check_answer(text, a, b, "loglog", &ans)
}

/// Checks every range of `text` (or a sample when `n > n_max`) and returns
/// the number checked and the shortest, then leftmost, failing range.
pub fn verify_text(
    text: &Text,
    n_max: usize,
    inject_fault: bool,
    seed: u64,
) -> (usize, Option<Failure>) {
    let n = text.len();
    let dense = DenseIndex::build(text);
    let mut linear = LinearIndex::build(text);
    if inject_fault && linear.lambda() > 1 {
        let pos = linear.layer(1).unwrap().bits().len() / 2 + 1;
        linear.inject_fault(1, pos);
    }
    let ranges: Vec<(usize, usize)> = if n <= n_max {
        (1..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect()
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..SAMPLED_RANGES)
            .map(|_| {
                let a = rng.gen_range(1..=n);
                let b = rng.gen_range(a..=n.min(a + MAX_WINDOW - 1));
                (a, b)
            })
            .collect()
    };
    let worst = ranges
        .par_iter()
        .filter_map(|&(a, b)| {
            check_range(text, &dense, &linear, a, b)
                .err()
                .map(|detail| Failure {
                    label: label(text),
                    a,
                    b,
                    detail,
                })
        })
        .min_by_key(|f| (f.b - f.a, f.a));
    (ranges.len(), worst)
}

pub fn random_codes(rng: &mut StdRng, n: usize, sigma: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(1..=sigma as u32)).collect()
}

/// Runs the running example, `extra` if given, and `trials` random texts
/// with `n <= n_max` and `σ` in `2..=5`.
pub fn run(cfg: &VerifyConfig, extra: Option<&Text>) -> Report {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut texts = vec![Text::from_bytes(RUNNING, None).unwrap()];
    for _ in 0..cfg.trials {
        let sigma = rng.gen_range(2..=5);
        let n = rng.gen_range(1..=cfg.n_max.max(1));
        texts.push(Text::from_codes(random_codes(&mut rng, n, sigma), sigma).unwrap());
    }
    let mut report = Report::default();
    let mut all: Vec<&Text> = texts.iter().collect();
    all.extend(extra);
    let results: Vec<(usize, Option<Failure>)> = all
        .par_iter()
        .enumerate()
        .map(|(k, t)| verify_text(t, cfg.n_max, cfg.inject_fault, cfg.seed ^ k as u64))
        .collect();
    for (count, failure) in results {
        report.texts += 1;
        report.ranges += count;
        report.failures.extend(failure);
    }
    for t in &texts {
        let codes = t.codes();
        let split = rng.gen_range(1..=codes.len());
        report.lemma_pairs += 1;
        if let Err(e) = check_extension_bounds(&codes[..split], &codes[split..], t.sigma()) {
            report.failures.push(Failure {
                label: label(t),
                a: 1,
                b: split,
                detail: e.to_string(),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn running_example_passes() {
        let t = Text::from_bytes(RUNNING, None).unwrap();
        let (count, failure) = verify_text(&t, 200, false, 0);
        assert_eq!(count, 171);
        assert_eq!(failure, None);
    }

    #[test]
    fn fault_is_pinpointed() {
        let t = Text::from_bytes(RUNNING, None).unwrap();
        let (_, failure) = verify_text(&t, 200, true, 0);
        let f = failure.expect("flipped bit must be caught");
        assert!(f.a <= f.b && f.b <= 18);
        assert_eq!(f.label, "abaabaaabbabbbaaab");
    }

    #[test]
    fn small_random_run() {
        let cfg = VerifyConfig {
            n_max: 40,
            trials: 20,
            seed: 1,
            inject_fault: false,
        };
        let report = run(&cfg, None);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.texts, 21);
    }
}
