//! Batch range queries with TSV output.

use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use isaw_core::{AnyIndex, Error, SawAnswer, Text, Witness};
use rayon::prelude::*;

use crate::tokens::{read_tokens, show_token, show_word, TokenFormat};

/// Loads an index file and the text it was built from, rejecting a text
/// whose checksum differs from the one recorded in the index.
pub fn load(index_path: &Path, text_path: &Path) -> Result<(AnyIndex, Text, TokenFormat)> {
    let bytes =
        std::fs::read(index_path).with_context(|| format!("reading {}", index_path.display()))?;
    let (index, tag) = AnyIndex::from_bytes(&bytes)
        .with_context(|| format!("parsing {}", index_path.display()))?;
    let format = TokenFormat::from_tag(tag)?;
    let info = index.info();
    let tokens = read_tokens(text_path, format)?;
    let found = isaw_core::text::checksum_tokens(tokens.iter().copied());
    if tokens.len() != info.n || found != info.checksum {
        return Err(Error::ChecksumMismatch {
            expected: info.checksum,
            found,
        }
        .into());
    }
    let text = Text::new(&tokens, Some(info.sigma))?;
    if text.alphabet() != info.alphabet.as_slice() {
        bail!("text alphabet differs from the index alphabet");
    }
    Ok((index, text, format))
}

/// Parses `a b` lines; blank lines and `#` comments are skipped.
pub fn parse_ranges(data: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (k, line) in data.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => out.push((a, b)),
            _ => bail!("line {}: expected two integers, got {line:?}", k + 1),
        }
    }
    Ok(out)
}

/// One output line: `a b len i j alpha [word]`, tab-separated. Length-1
/// answers are printed in letter form (`i = j = 0`).
pub fn format_answer(
    a: usize,
    b: usize,
    ans: &SawAnswer,
    text: &Text,
    index: &AnyIndex,
    format: TokenFormat,
    print_word: bool,
) -> String {
    let info = index.info();
    let word = ans
        .word(text.codes())
        .expect("witness lies inside the text");
    let (i, j, alpha) = match ans.witness {
        _ if ans.len == 1 => (0, 0, Some(word[0])),
        Witness::Substring { start, end } => (start, end, None),
        Witness::Extension { start, end, letter } => (start, end, Some(letter)),
    };
    let alpha = alpha.map_or_else(|| "-".to_string(), |c| show_token(info.token(c), format));
    let mut line = format!("{a}\t{b}\t{}\t{i}\t{j}\t{alpha}", ans.len);
    if print_word {
        line.push('\t');
        line.push_str(&show_word(&word, info, format));
    }
    line
}

/// Answers `ranges` in parallel and writes results in input order. Errors
/// go to `err`; returns how many queries failed.
pub fn run(
    index: &AnyIndex,
    text: &Text,
    format: TokenFormat,
    ranges: &[(usize, usize)],
    print_word: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<usize> {
    let results: Vec<Result<String, Error>> = ranges
        .par_iter()
        .map(|&(a, b)| {
            index
                .query(a, b)
                .map(|ans| format_answer(a, b, &ans, text, index, format, print_word))
        })
        .collect();
    let mut failed = 0;
    for (&(a, b), res) in ranges.iter().zip(results) {
        match res {
            Ok(line) => writeln!(out, "{line}")?,
            Err(e) => {
                failed += 1;
                writeln!(err, "{a}\t{b}\terror: {e}")?;
            }
        }
    }
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use isaw_core::Mode;

    #[test]
    fn running_example_lines() {
        let text = Text::from_bytes(b"abaabaaabbabbbaaab", None).unwrap();
        let idx = AnyIndex::build(&text, Mode::Linear);
        let mut out = Vec::new();
        let mut err = Vec::new();
        let failed = run(
            &idx,
            &text,
            TokenFormat::Bytes,
            &[(8, 14), (5, 14), (0, 3)],
            true,
            &mut out,
            &mut err,
        )
        .unwrap();
        assert_eq!(failed, 1);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "8\t14\t2\t7\t8\t-\taa\n5\t14\t3\t4\t6\t-\taba\n"
        );
        assert!(String::from_utf8(err).unwrap().starts_with("0\t3\terror"));
    }

    #[test]
    fn ranges() {
        assert_eq!(
            parse_ranges("1 2\n\n# c\n 3   4 \n").unwrap(),
            vec![(1, 2), (3, 4)]
        );
        assert!(parse_ranges("1\n").is_err());
        assert!(parse_ranges("1 2 3\n").is_err());
        assert!(parse_ranges("1 x\n").is_err());
    }
}
