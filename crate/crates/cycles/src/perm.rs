use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// How a letter sits relative to its neighbours, with virtual zeros at both
/// ends of the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterClass {
    Valley,
    Peak,
    DoubleAscent,
    DoubleDescent,
}

/// Permutation of [n] in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Domain("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Domain(format!(
                    "word is not a permutation of [{n}]"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// 1-based position of value `v`.
    pub fn position(&self, v: u32) -> Result<usize> {
        self.word
            .iter()
            .position(|&x| x == v)
            .map(|p| p + 1)
            .ok_or_else(|| Error::Domain(format!("value {v} out of range")))
    }

    /// Letter at 1-based position, zero beyond either end.
    fn at(&self, pos: usize) -> u32 {
        if pos == 0 || pos > self.word.len() {
            0
        } else {
            self.word[pos - 1]
        }
    }

    /// Classifies value `v` against its neighbours.
    pub fn classify(&self, v: u32) -> Result<LetterClass> {
        let p = self.position(v)?;
        let rises_in = self.at(p - 1) < v;
        let rises_out = v < self.at(p + 1);
        Ok(match (rises_in, rises_out) {
            (false, true) => LetterClass::Valley,
            (true, false) => LetterClass::Peak,
            (true, true) => LetterClass::DoubleAscent,
            (false, false) => LetterClass::DoubleDescent,
        })
    }

    /// Occurrences of the vincular pattern 2-13 in which `k` plays the 2:
    /// adjacent pairs strictly right of `k`'s position that straddle `k`.
    pub fn stat_2_13(&self, k: u32) -> Result<u32> {
        let j = self.position(k)?;
        let mut count = 0;
        for p in (j + 1)..self.word.len() {
            if self.at(p) < k && k < self.at(p + 1) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Descents sit exactly at the even letters.
    pub fn is_dumont(&self) -> bool {
        self.word
            .windows(2)
            .all(|w| (w[0] > w[1]) == (w[0] % 2 == 0))
    }

    /// Every descent drops from an odd letter to an even one, and the word
    /// ends on an odd letter.
    pub fn is_soe(&self) -> bool {
        self.word.last().is_some_and(|&l| l % 2 == 1)
            && self
                .word
                .windows(2)
                .all(|w| w[0] < w[1] || (w[0] % 2 == 1 && w[1] % 2 == 0))
    }

    /// Values that start a descent.
    pub fn descent_tops(&self) -> BTreeSet<u32> {
        self.word
            .windows(2)
            .filter(|w| w[0] > w[1])
            .map(|w| w[0])
            .collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated values, or a bare digit string when n <= 9.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation literal".into()));
        }
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad permutation entry `{t}`")))
                })
                .collect::<Result<_>>()?
        } else if s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| (b - b'0') as u32).collect()
        } else {
            return Err(Error::Parse(format!("bad permutation literal `{s}`")));
        };
        Permutation::new(word).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}
