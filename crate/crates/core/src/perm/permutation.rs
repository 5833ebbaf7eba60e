use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A permutation of `1..=m` in one-line notation, `m <= 255`.
///
/// Positions and values are 1-based in the public API.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Validates that `word` covers `1..=len` exactly once.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let m = word.len();
        if m > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("length {m} exceeds 255")));
        }
        let mut seen = vec![false; m + 1];
        for (i, &v) in word.iter().enumerate() {
            let v = v as usize;
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} at position {} in a word of length {m}",
                    i + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// Wraps a word already known to be a permutation.
    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(m: usize) -> Self {
        Self {
            word: (1..=m as u8).collect(),
        }
    }

    pub fn from_slice(word: &[u8]) -> Result<Self> {
        Self::new(word.to_vec())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u8> {
        self.word
    }

    /// `sigma(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    /// Position vector: `pos[v]` is the 1-based position of value `v`
    /// (index 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v as usize] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Self {
        let pos = self.positions();
        Self {
            word: pos[1..].iter().map(|&p| p as u8).collect(),
        }
    }

    /// Cycles of `i -> sigma(i)`, each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.len();
        let mut seen = vec![false; m + 1];
        let mut out = Vec::new();
        for start in 1..=m {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.at(i);
            }
            out.push(cyc);
        }
        out
    }

    /// Parses cycle notation such as `(1,3,4,2)(5)`; the length is the
    /// largest value mentioned, unlisted values are fixed.
    pub fn from_cycles(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("cycle notation `{s}`: {why}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = body.find(')').ok_or_else(|| bad("missing `)`"))?;
            let elems = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("non-integer entry")))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(elems);
            rest = body[close + 1..].trim_start();
        }
        let m = cycles.iter().flatten().copied().max().unwrap_or(0);
        if m > u8::MAX as usize {
            return Err(bad("value exceeds 255"));
        }
        let mut word: Vec<usize> = vec![0; m + 1];
        for cyc in &cycles {
            for (k, &i) in cyc.iter().enumerate() {
                let j = cyc[(k + 1) % cyc.len()];
                if i == 0 || word[i] != 0 {
                    return Err(bad("repeated or zero entry"));
                }
                word[i] = j;
            }
        }
        for (i, w) in word.iter_mut().enumerate().skip(1) {
            if *w == 0 {
                *w = i;
            }
        }
        Self::new(word[1..].iter().map(|&v| v as u8).collect())
    }

    /// Cycle notation with each cycle led by its least element.
    pub fn cycle_string(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// One-line notation separated by whitespace or commas, or cycle notation
/// when the input starts with `(`. Compact digit strings are not accepted
/// for lengths of ten or more, since they are ambiguous.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            return Self::from_cycles(s);
        }
        let toks: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let word: Vec<u8> = if toks.len() == 1 && toks[0].len() > 1 {
            // Compact digits like "2413" are only unambiguous below ten.
            let t = toks[0];
            if t.len() > 9 || !t.chars().all(|c| ('1'..='9').contains(&c)) {
                return Err(Error::Parse(format!(
                    "`{t}` is ambiguous; separate entries with spaces or commas"
                )));
            }
            t.bytes().map(|b| b - b'0').collect()
        } else {
            toks.iter()
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad entry `{t}` in `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
