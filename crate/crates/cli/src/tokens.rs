//! Reading texts in the supported token formats.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use isaw_core::{Text, TextInfo};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TokenFormat {
    /// One token per byte.
    Bytes,
    /// Little-endian u32 tokens.
    U32le,
    /// One decimal token per non-empty line.
    AsciiLines,
}

impl TokenFormat {
    pub fn tag(self) -> u32 {
        match self {
            TokenFormat::Bytes => 0,
            TokenFormat::U32le => 1,
            TokenFormat::AsciiLines => 2,
        }
    }

    pub fn from_tag(tag: u32) -> Result<Self> {
        Ok(match tag {
            0 => TokenFormat::Bytes,
            1 => TokenFormat::U32le,
            2 => TokenFormat::AsciiLines,
            t => bail!("unknown token format tag {t}"),
        })
    }
}

pub fn parse_tokens(data: &[u8], format: TokenFormat) -> Result<Vec<u32>> {
    match format {
        TokenFormat::Bytes => Ok(data.iter().map(|&b| u32::from(b)).collect()),
        TokenFormat::U32le => {
            if !data.len().is_multiple_of(4) {
                bail!("u32le input length {} is not a multiple of 4", data.len());
            }
            Ok(data
                .chunks_exact(4)
                .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
                .collect())
        }
        TokenFormat::AsciiLines => {
            let text = std::str::from_utf8(data).context("ascii-lines input is not UTF-8")?;
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(k, l)| {
                    l.trim()
                        .parse::<u32>()
                        .with_context(|| format!("line {}: bad token {l:?}", k + 1))
                })
                .collect()
        }
    }
}

pub fn read_tokens(path: &Path, format: TokenFormat) -> Result<Vec<u32>> {
    let data = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    parse_tokens(&data, format)
}

pub fn read_text(path: &Path, format: TokenFormat, sigma: Option<usize>) -> Result<Text> {
    let tokens = read_tokens(path, format)?;
    Ok(Text::new(&tokens, sigma)?)
}

/// Renders a token for the `alpha` column.
pub fn show_token(token: u32, format: TokenFormat) -> String {
    match format {
        TokenFormat::Bytes if (0x21..0x7f).contains(&token) => char::from(token as u8).to_string(),
        TokenFormat::Bytes => format!("\\x{token:02x}"),
        _ => token.to_string(),
    }
}

/// Renders a word of letters: characters for byte texts, space-separated
/// tokens otherwise.
pub fn show_word(word: &[u32], info: &TextInfo, format: TokenFormat) -> String {
    let mut out = String::new();
    for (k, &c) in word.iter().enumerate() {
        let token = info.token(c);
        if format != TokenFormat::Bytes && k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{}", show_token(token, format));
    }
    out
}
