//! Texts over a remapped integer alphabet, their suffix order, per-length
//! word ranks and substring complexity, and the shortest absent word of the
//! whole text.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Alphabet letter after remapping, in `[1, sigma]`.
pub type Letter = u32;

/// FNV-1a parameters used for the text checksum stored in index files.
pub const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
pub const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// Constant-space representation of an answer word. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// The word `T[start..=end]`.
    Substring { start: usize, end: usize },
    /// The word `T[start..=end]` followed by `letter`. `start = end = 0`
    /// stands for the empty prefix, i.e. the word is just `letter`.
    Extension {
        start: usize,
        end: usize,
        letter: Letter,
    },
}

/// A shortest absent word: its length and a witness spelling it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SawAnswer {
    pub len: usize,
    pub witness: Witness,
}

impl SawAnswer {
    pub fn substring(start: usize, end: usize) -> Self {
        debug_assert!(1 <= start && start <= end);
        Self {
            len: end - start + 1,
            witness: Witness::Substring { start, end },
        }
    }

    pub fn letter(letter: Letter) -> Self {
        Self {
            len: 1,
            witness: Witness::Extension {
                start: 0,
                end: 0,
                letter,
            },
        }
    }

    pub fn extension(start: usize, end: usize, letter: Letter) -> Self {
        if start == 0 {
            return Self::letter(letter);
        }
        Self {
            len: end - start + 2,
            witness: Witness::Extension { start, end, letter },
        }
    }

    /// True when the witness ranges lie in `[1, n]`, the letter in
    /// `[1, sigma]`, and the spelled word has length `len`.
    pub fn is_well_formed(&self, n: usize, sigma: usize) -> bool {
        let range_ok = |s: usize, e: usize| 1 <= s && s <= e && e <= n;
        match self.witness {
            Witness::Substring { start, end } => {
                range_ok(start, end) && end - start + 1 == self.len
            }
            Witness::Extension { start, end, letter } => {
                let letter_ok = letter >= 1 && letter as usize <= sigma;
                let prefix_ok = if start == 0 && end == 0 {
                    self.len == 1
                } else {
                    range_ok(start, end) && end - start + 2 == self.len
                };
                letter_ok && prefix_ok
            }
        }
    }

    /// Spells the witness over `codes`, the text's letters (0-based slice).
    /// Returns `None` if the witness is malformed for this text.
    pub fn word(&self, codes: &[Letter]) -> Option<Vec<Letter>> {
        let slice = |s: usize, e: usize| {
            (1 <= s && s <= e && e <= codes.len()).then(|| codes[s - 1..e].to_vec())
        };
        match self.witness {
            Witness::Substring { start, end } => slice(start, end),
            Witness::Extension {
                start: 0,
                end: 0,
                letter,
            } => Some(vec![letter]),
            Witness::Extension { start, end, letter } => {
                let mut w = slice(start, end)?;
                w.push(letter);
                Some(w)
            }
        }
    }
}

/// Lexicographic ranks in `Σ^j` of every length-`j` window of a text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankArray {
    pub j: usize,
    /// `ranks[i - 1]` is the rank of `T[i..i+j-1]`, in `[1, σ^j]`.
    pub ranks: Vec<u64>,
}

impl RankArray {
    /// Rank of the window starting at 1-based position `i`.
    pub fn get(&self, i: usize) -> u64 {
        self.ranks[i - 1]
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }
}

#[derive(Debug)]
struct SuffixData {
    sa: Vec<u32>,
    lcp: Vec<u32>,
    /// `complexity[j]` for `j` in `0..=n` (index 0 unused).
    complexity: Vec<usize>,
}

/// A text over the alphabet `[1, sigma]` plus the map back to input tokens.
#[derive(Debug)]
pub struct Text {
    codes: Vec<Letter>,
    sigma: usize,
    /// `alphabet[c - 1]` is the input token encoded as letter `c`.
    alphabet: Vec<u32>,
    suffixes: OnceLock<SuffixData>,
    global: OnceLock<SawAnswer>,
}

impl Clone for Text {
    fn clone(&self) -> Self {
        Self {
            codes: self.codes.clone(),
            sigma: self.sigma,
            alphabet: self.alphabet.clone(),
            suffixes: OnceLock::new(),
            global: OnceLock::new(),
        }
    }
}

impl PartialEq for Text {
    fn eq(&self, other: &Self) -> bool {
        self.codes == other.codes && self.sigma == other.sigma && self.alphabet == other.alphabet
    }
}

impl Eq for Text {}

impl Text {
    /// Remaps `raw` onto `[1, sigma]` preserving token order.
    ///
    /// Without `sigma` the alphabet is the set of distinct tokens. With it,
    /// `sigma - distinct` extra letters are appended above the largest token;
    /// they never occur in the text.
    pub fn new(raw: &[u32], sigma: Option<usize>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut alphabet = raw.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let distinct = alphabet.len();
        let sigma = match sigma {
            None if distinct < 2 => return Err(Error::UnaryAlphabet),
            None => distinct,
            Some(s) if s < 2 || s < distinct => {
                return Err(Error::SigmaTooSmall { sigma: s, distinct })
            }
            Some(s) => s,
        };
        let max_token = *alphabet.last().unwrap();
        for k in 1..=(sigma - distinct) {
            let extra = u32::try_from(k)
                .ok()
                .and_then(|k| max_token.checked_add(k))
                .ok_or(Error::AlphabetOverflow {
                    max_token,
                    missing: sigma - distinct,
                })?;
            alphabet.push(extra);
        }
        let codes = raw
            .iter()
            .map(|t| alphabet[..distinct].binary_search(t).unwrap() as Letter + 1)
            .collect();
        Ok(Self::assemble(codes, sigma, alphabet))
    }

    pub fn from_bytes(raw: &[u8], sigma: Option<usize>) -> Result<Self> {
        let tokens: Vec<u32> = raw.iter().map(|&b| u32::from(b)).collect();
        Self::new(&tokens, sigma)
    }

    /// Wraps letters already in `[1, sigma]`; each letter is its own token.
    pub fn from_codes(codes: Vec<Letter>, sigma: usize) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::EmptyInput);
        }
        if sigma < 2 {
            return Err(Error::SigmaTooSmall {
                sigma,
                distinct: sigma,
            });
        }
        if let Some(&bad) = codes.iter().find(|&&c| c == 0 || c as usize > sigma) {
            return Err(Error::SigmaTooSmall {
                sigma,
                distinct: bad as usize,
            });
        }
        let alphabet = (1..=sigma as u32).collect();
        Ok(Self::assemble(codes, sigma, alphabet))
    }

    fn assemble(codes: Vec<Letter>, sigma: usize, alphabet: Vec<u32>) -> Self {
        Self {
            codes,
            sigma,
            alphabet,
            suffixes: OnceLock::new(),
            global: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Letters as a 0-based slice.
    pub fn codes(&self) -> &[Letter] {
        &self.codes
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Letter {
        self.codes[i - 1]
    }

    pub fn alphabet(&self) -> &[u32] {
        &self.alphabet
    }

    pub fn encode(&self, token: u32) -> Option<Letter> {
        self.alphabet
            .iter()
            .position(|&t| t == token)
            .map(|p| p as Letter + 1)
    }

    pub fn decode(&self, letter: Letter) -> u32 {
        self.alphabet[letter as usize - 1]
    }

    /// FNV-1a over the original tokens, each as 4 little-endian bytes.
    pub fn checksum(&self) -> u64 {
        checksum_tokens(self.codes.iter().map(|&c| self.decode(c)))
    }

    fn suffix_data(&self) -> &SuffixData {
        self.suffixes.get_or_init(|| {
            let sa = suffix_array(&self.codes, self.sigma);
            let lcp = lcp_array(&self.codes, &sa);
            let complexity = complexity_profile(self.codes.len(), &sa, &lcp);
            SuffixData {
                sa,
                lcp,
                complexity,
            }
        })
    }

    /// Suffix array: 1-based starting positions in lexicographic order.
    pub fn suffix_order(&self) -> Vec<usize> {
        self.suffix_data()
            .sa
            .iter()
            .map(|&p| p as usize + 1)
            .collect()
    }

    /// `lcp[k]` = longest common prefix of the suffixes at ranks `k - 1`, `k`.
    pub fn lcp(&self) -> &[u32] {
        &self.suffix_data().lcp
    }

    fn check_length(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.len() {
            Err(Error::LengthOutOfRange { j, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// Ranks in `Σ^j` of all length-`j` windows, as base-σ numbers plus one.
    pub fn rank_substrings(&self, j: usize) -> Result<RankArray> {
        self.check_length(j)?;
        let sigma = self.sigma as u64;
        let top = sigma.checked_pow(j as u32).ok_or(Error::RankOverflow {
            j,
            sigma: self.sigma,
        })? / sigma;
        let digit = |i: usize| u64::from(self.codes[i] - 1);
        let mut enc = (0..j).fold(0u64, |acc, i| acc * sigma + digit(i));
        let count = self.len() - j + 1;
        let mut ranks = Vec::with_capacity(count);
        ranks.push(enc + 1);
        for i in 1..count {
            enc = (enc - digit(i - 1) * top) * sigma + digit(i + j - 1);
            ranks.push(enc + 1);
        }
        Ok(RankArray { j, ranks })
    }

    /// Number of distinct length-`j` substrings.
    pub fn substring_complexity(&self, j: usize) -> Result<usize> {
        self.check_length(j)?;
        Ok(self.suffix_data().complexity[j])
    }

    /// `σ^j`, saturated at `n + 1` (only comparisons against counts `<= n` matter).
    pub fn clamped_power(&self, j: usize) -> usize {
        clamped_pow(self.sigma, j, self.len() + 1)
    }

    /// Length of a shortest absent word of the whole text.
    pub fn lambda(&self) -> usize {
        self.global_saw().len
    }

    /// A shortest absent word of the whole text: the lexicographically
    /// smallest one, found as the first missing branch in suffix order.
    pub fn global_saw(&self) -> SawAnswer {
        *self.global.get_or_init(|| self.compute_global_saw())
    }

    fn compute_global_saw(&self) -> SawAnswer {
        let n = self.len();
        let data = self.suffix_data();
        let lambda = (1..=n)
            .find(|&j| data.complexity[j] < self.clamped_power(j))
            .expect("the whole text is the only length-n word");
        assert!(
            lambda <= floor_log(self.sigma, n) + 1,
            "shortest absent word length {lambda} exceeds the log bound"
        );
        if lambda == 1 {
            let mut present = vec![false; self.sigma + 1];
            for &c in &self.codes {
                present[c as usize] = true;
            }
            let letter = (1..=self.sigma).find(|&c| !present[c]).unwrap();
            return SawAnswer::letter(letter as Letter);
        }
        let depth = lambda - 1;
        let mut group_start: Option<usize> = None;
        let mut branches: Vec<Letter> = Vec::new();
        let close = |start: Option<usize>, branches: &[Letter]| -> Option<SawAnswer> {
            let start = start?;
            let missing = first_missing(branches, self.sigma)?;
            Some(SawAnswer::extension(start + 1, start + depth, missing))
        };
        for (k, &p) in data.sa.iter().enumerate() {
            let p = p as usize;
            if n - p < depth {
                if let Some(ans) = close(group_start.take(), &branches) {
                    return ans;
                }
                branches.clear();
                continue;
            }
            if group_start.is_none() || (data.lcp[k] as usize) < depth {
                if let Some(ans) = close(group_start.take(), &branches) {
                    return ans;
                }
                branches.clear();
                group_start = Some(p);
            }
            if n - p > depth {
                let next = self.codes[p + depth];
                if branches.last() != Some(&next) {
                    branches.push(next);
                }
            }
        }
        close(group_start, &branches).expect("some length-(lambda-1) word must lack an extension")
    }
}

pub fn checksum_tokens(tokens: impl IntoIterator<Item = u32>) -> u64 {
    let mut h = FNV_OFFSET;
    for t in tokens {
        for b in t.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(FNV_PRIME);
        }
    }
    h
}

/// Smallest letter of `[1, sigma]` missing from the sorted `present`.
fn first_missing(present: &[Letter], sigma: usize) -> Option<Letter> {
    let mut expect = 1;
    for &c in present {
        if c != expect {
            return Some(expect);
        }
        expect += 1;
    }
    (expect as usize <= sigma).then_some(expect)
}

pub(crate) fn clamped_pow(base: usize, exp: usize, cap: usize) -> usize {
    let mut acc = 1usize;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc >= cap {
            return cap;
        }
    }
    acc
}

/// `floor(log_base(x))` for `x >= 1`.
pub(crate) fn floor_log(base: usize, x: usize) -> usize {
    let mut k = 0;
    let mut p = base;
    while p <= x {
        k += 1;
        p = match p.checked_mul(base) {
            Some(v) => v,
            None => break,
        };
    }
    k
}

/// Prefix doubling with two counting-sort passes per round.
fn suffix_array(s: &[Letter], sigma: usize) -> Vec<u32> {
    let n = s.len();
    let mut rank: Vec<u32> = s.to_vec();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut buckets = vec![0usize; sigma.max(n) + 2];
    counting_sort(
        &(0..n as u32).collect::<Vec<_>>(),
        &rank,
        sigma,
        &mut sa,
        &mut buckets,
    );
    let mut max_rank = relabel(&sa, &mut rank, |a, b| s[a] == s[b]);
    let mut k = 1;
    let mut order = Vec::with_capacity(n);
    let mut next = vec![0u32; n];
    while (max_rank as usize) < n {
        order.clear();
        order.extend((n - k) as u32..n as u32);
        order.extend(
            sa.iter()
                .filter(|&&p| p as usize >= k)
                .map(|&p| p - k as u32),
        );
        counting_sort(&order, &rank, max_rank as usize, &mut sa, &mut buckets);
        let key = |p: usize| (rank[p], if p + k < n { rank[p + k] } else { 0 });
        next[sa[0] as usize] = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1] as usize, sa[w] as usize);
            next[b] = next[a] + u32::from(key(a) != key(b));
        }
        max_rank = next[sa[n - 1] as usize];
        std::mem::swap(&mut rank, &mut next);
        k *= 2;
    }
    sa
}

/// Stable sort of `order` by `key[p]` (values in `1..=max`) into `out`.
fn counting_sort(order: &[u32], key: &[u32], max: usize, out: &mut [u32], buckets: &mut [usize]) {
    buckets[..=max + 1].iter_mut().for_each(|b| *b = 0);
    for &p in order {
        buckets[key[p as usize] as usize + 1] += 1;
    }
    for v in 1..=max + 1 {
        buckets[v] += buckets[v - 1];
    }
    for &p in order {
        let slot = &mut buckets[key[p as usize] as usize];
        out[*slot] = p;
        *slot += 1;
    }
}

/// Dense ranks `1..` in `sa` order; returns the largest.
fn relabel(sa: &[u32], rank: &mut [u32], same: impl Fn(usize, usize) -> bool) -> u32 {
    let mut next = vec![0u32; sa.len()];
    next[sa[0] as usize] = 1;
    for w in 1..sa.len() {
        let (a, b) = (sa[w - 1] as usize, sa[w] as usize);
        next[b] = next[a] + u32::from(!same(a, b));
    }
    let max = next[sa[sa.len() - 1] as usize];
    rank.copy_from_slice(&next);
    max
}

/// Kasai et al.
fn lcp_array(s: &[Letter], sa: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut inv = vec![0usize; n];
    for (k, &p) in sa.iter().enumerate() {
        inv[p as usize] = k;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for p in 0..n {
        if inv[p] == 0 {
            h = 0;
            continue;
        }
        let q = sa[inv[p] - 1] as usize;
        while p + h < n && q + h < n && s[p + h] == s[q + h] {
            h += 1;
        }
        lcp[inv[p]] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Distinct-substring counts for every length, from one sweep over the
/// suffix array: the suffix at rank `k` introduces new words of lengths
/// `lcp[k] + 1 ..= suffix length`.
fn complexity_profile(n: usize, sa: &[u32], lcp: &[u32]) -> Vec<usize> {
    let mut diff = vec![0isize; n + 2];
    for (k, &p) in sa.iter().enumerate() {
        let len = n - p as usize;
        let h = if k == 0 { 0 } else { lcp[k] as usize };
        if len > h {
            diff[h + 1] += 1;
            diff[len + 1] -= 1;
        }
    }
    let mut out = vec![0usize; n + 1];
    let mut acc = 0isize;
    for j in 1..=n {
        acc += diff[j];
        out[j] = acc as usize;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashSet};

    const RUNNING: &[u8] = b"abaabaaabbabbbaaab";

    fn running() -> Text {
        Text::from_bytes(RUNNING, None).unwrap()
    }

    fn naive_suffix_order(codes: &[Letter]) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..codes.len()).collect();
        idx.sort_by(|&a, &b| codes[a..].cmp(&codes[b..]));
        idx.into_iter().map(|p| p + 1).collect()
    }

    /// Ranks by sorting the distinct j-grams of all of Σ^j.
    fn naive_ranks(codes: &[Letter], sigma: usize, j: usize) -> Vec<u64> {
        codes
            .windows(j)
            .map(|w| {
                // Position of w among all of Σ^j in lexicographic order.
                let mut below = 0u64;
                for (d, &c) in w.iter().enumerate() {
                    below += u64::from(c - 1) * (sigma as u64).pow((j - 1 - d) as u32);
                }
                below + 1
            })
            .collect()
    }

    #[test]
    fn build_running_example() {
        let t = running();
        assert_eq!(t.len(), 18);
        assert_eq!(t.sigma(), 2);
        assert_eq!(t.encode(u32::from(b'a')), Some(1));
        assert_eq!(t.encode(u32::from(b'b')), Some(2));
        assert_eq!(t.decode(2), u32::from(b'b'));
    }

    #[test]
    fn build_errors() {
        assert_eq!(Text::from_bytes(b"", None), Err(Error::EmptyInput));
        assert_eq!(Text::from_bytes(b"aaaa", None), Err(Error::UnaryAlphabet));
        assert_eq!(
            Text::from_bytes(b"abc", Some(2)),
            Err(Error::SigmaTooSmall {
                sigma: 2,
                distinct: 3
            })
        );
        assert!(matches!(
            Text::from_bytes(b"a", Some(1)),
            Err(Error::SigmaTooSmall { .. })
        ));
        assert!(matches!(
            Text::new(&[u32::MAX], Some(2)),
            Err(Error::AlphabetOverflow { .. })
        ));
        assert!(Text::from_codes(vec![1, 3], 2).is_err());
    }

    #[test]
    fn forced_sigma_adds_letters() {
        let t = Text::from_bytes(b"aaaa", Some(2)).unwrap();
        assert_eq!((t.len(), t.sigma()), (4, 2));
        assert_eq!(t.codes(), &[1, 1, 1, 1]);
        assert_eq!(t.decode(2), u32::from(b'b'));
        assert_eq!(t.substring_complexity(1).unwrap(), 1);
        let saw = t.global_saw();
        assert_eq!(saw.len, 1);
        assert_eq!(saw.word(t.codes()).unwrap(), vec![2]);
    }

    #[test]
    fn alphabet_round_trips() {
        let raw = [40u32, 7, 7, 1000, 40, 3];
        let t = Text::new(&raw, None).unwrap();
        for &x in &raw {
            assert_eq!(t.decode(t.encode(x).unwrap()), x);
        }
        assert_eq!(t.codes(), &[3, 2, 2, 4, 3, 1]);
    }

    #[test]
    fn suffix_orders() {
        assert_eq!(
            Text::from_bytes(b"ab", None).unwrap().suffix_order(),
            vec![1, 2]
        );
        assert_eq!(
            Text::from_bytes(b"ba", None).unwrap().suffix_order(),
            vec![2, 1]
        );
        let t = running();
        assert_eq!(t.suffix_order(), naive_suffix_order(t.codes()));
    }

    #[test]
    fn running_example_ranks() {
        let t = running();
        assert_eq!(
            t.rank_substrings(1).unwrap().ranks,
            vec![1, 2, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 2, 1, 1, 1, 2]
        );
        assert_eq!(
            t.rank_substrings(2).unwrap().ranks,
            vec![2, 3, 1, 2, 3, 1, 1, 2, 4, 3, 2, 4, 4, 3, 1, 1, 2]
        );
        assert_eq!(
            t.rank_substrings(3).unwrap().ranks,
            vec![3, 5, 2, 3, 5, 1, 2, 4, 7, 6, 4, 8, 7, 5, 1, 2]
        );
        let ab = Text::from_bytes(b"ab", None).unwrap();
        assert_eq!(ab.rank_substrings(2).unwrap().ranks, vec![2]);
        assert_eq!(
            t.rank_substrings(0),
            Err(Error::LengthOutOfRange { j: 0, n: 18 })
        );
        assert_eq!(
            t.rank_substrings(19),
            Err(Error::LengthOutOfRange { j: 19, n: 18 })
        );
    }

    #[test]
    fn rank_overflow_is_reported() {
        let codes: Vec<Letter> = (0..100).map(|i| i % 3 + 1).collect();
        let t = Text::from_codes(codes, 3).unwrap();
        assert!(t.rank_substrings(40).is_ok());
        assert_eq!(
            t.rank_substrings(41),
            Err(Error::RankOverflow { j: 41, sigma: 3 })
        );
    }

    #[test]
    fn running_example_complexity_and_saw() {
        let t = running();
        assert_eq!(t.substring_complexity(3).unwrap(), 8);
        assert_eq!(t.lambda(), 4);
        let word = t.global_saw().word(t.codes()).unwrap();
        let allowed: [&[Letter]; 4] = [&[1, 1, 1, 1], &[1, 2, 1, 2], &[2, 1, 2, 1], &[2, 2, 2, 2]];
        assert!(allowed.contains(&word.as_slice()), "{word:?}");
        assert!(t.global_saw().is_well_formed(18, 2));
    }

    #[test]
    fn two_letter_text() {
        let t = Text::from_bytes(b"ab", Some(2)).unwrap();
        let saw = t.global_saw();
        assert_eq!(saw.len, 2);
        let w = saw.word(t.codes()).unwrap();
        assert!([vec![1, 1], vec![2, 1], vec![2, 2]].contains(&w));
    }

    #[test]
    fn witness_shapes() {
        assert!(SawAnswer::letter(2).is_well_formed(1, 2));
        assert!(!SawAnswer::letter(3).is_well_formed(1, 2));
        assert!(SawAnswer::extension(2, 3, 1).is_well_formed(3, 2));
        assert_eq!(SawAnswer::extension(2, 3, 1).len, 3);
        assert!(!SawAnswer::substring(2, 4).is_well_formed(3, 2));
        assert_eq!(SawAnswer::substring(2, 4).word(&[1, 2]), None);
        assert_eq!(
            SawAnswer::extension(1, 2, 2).word(&[1, 1, 1]),
            Some(vec![1, 1, 2])
        );
    }

    fn arb_text() -> impl Strategy<Value = (Vec<Letter>, usize)> {
        (2usize..=5).prop_flat_map(|sigma| {
            (
                prop::collection::vec(1..=sigma as Letter, 1..200),
                Just(sigma),
            )
        })
    }

    proptest! {
        #[test]
        fn suffix_array_matches_naive_sort((codes, sigma) in arb_text()) {
            let t = Text::from_codes(codes, sigma).unwrap();
            prop_assert_eq!(t.suffix_order(), naive_suffix_order(t.codes()));
        }

        #[test]
        fn ranks_and_complexity_match_enumeration((codes, sigma) in arb_text(), j in 1usize..12) {
            let t = Text::from_codes(codes.clone(), sigma).unwrap();
            prop_assume!(j <= t.len());
            let ranks = t.rank_substrings(j).unwrap();
            prop_assert_eq!(&ranks.ranks, &naive_ranks(&codes, sigma, j));
            // Equal ranks exactly for equal words, ordered like the words.
            let mut words: Vec<(&[Letter], u64)> =
                codes.windows(j).zip(ranks.ranks.iter().copied()).collect();
            words.sort();
            for pair in words.windows(2) {
                prop_assert_eq!(pair[0].0 == pair[1].0, pair[0].1 == pair[1].1);
                prop_assert!(pair[0].1 <= pair[1].1);
            }
            let distinct: HashSet<&[Letter]> = codes.windows(j).collect();
            prop_assert_eq!(t.substring_complexity(j).unwrap(), distinct.len());
        }

        #[test]
        fn global_saw_is_shortest_and_absent((codes, sigma) in arb_text()) {
            let t = Text::from_codes(codes.clone(), sigma).unwrap();
            let saw = t.global_saw();
            prop_assert!(saw.is_well_formed(t.len(), sigma));
            let word = saw.word(&codes).unwrap();
            prop_assert_eq!(word.len(), saw.len);
            prop_assert!(!codes.windows(saw.len).any(|w| w == word.as_slice()));
            if saw.len > 1 {
                let shorter: BTreeSet<&[Letter]> = codes.windows(saw.len - 1).collect();
                prop_assert_eq!(shorter.len(), sigma.pow(saw.len as u32 - 1));
            }
            prop_assert!(saw.len <= floor_log(sigma, t.len()) + 1);
        }
    }

    #[test]
    fn checksum_is_fnv1a() {
        assert_eq!(checksum_tokens([]), FNV_OFFSET);
        let t = Text::from_bytes(b"ab", None).unwrap();
        assert_eq!(t.checksum(), checksum_tokens([97, 98]));
        assert_ne!(
            t.checksum(),
            Text::from_bytes(b"ba", None).unwrap().checksum()
        );
    }

    #[test]
    fn logs_and_powers() {
        assert_eq!(floor_log(2, 1), 0);
        assert_eq!(floor_log(2, 18), 4);
        assert_eq!(floor_log(3, 27), 3);
        assert_eq!(floor_log(2, usize::MAX), 63);
        assert_eq!(clamped_pow(2, 3, 100), 8);
        assert_eq!(clamped_pow(2, 70, 19), 19);
    }
}
