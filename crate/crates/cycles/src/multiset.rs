use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Finite multiset of positive integers: the content of a cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Multiset {
    counts: BTreeMap<u32, u32>,
}

impl Multiset {
    /// Collects values into a multiset. Zero is rejected.
    pub fn from_values<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut counts = BTreeMap::new();
        for v in values {
            if v == 0 {
                return Err(Error::Domain("multiset values must be positive".into()));
            }
            *counts.entry(v).or_insert(0) += 1;
        }
        Ok(Multiset { counts })
    }

    /// The set {1, 2, ..., n}.
    pub fn one_to(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("range must be nonempty".into()));
        }
        Self::from_values(1..=n)
    }

    /// {1^k, 2^k, ..., top^k}.
    pub fn uniform(top: u32, k: u32) -> Result<Self> {
        if top == 0 || k == 0 {
            return Err(Error::Domain("uniform multiset needs top >= 1 and k >= 1".into()));
        }
        Self::from_values((1..=top).flat_map(|v| std::iter::repeat(v).take(k as usize)))
    }

    /// Total size counted with multiplicity.
    pub fn size(&self) -> usize {
        self.counts.values().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn min_value(&self) -> Option<u32> {
        self.counts.keys().next().copied()
    }

    pub fn max_value(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn multiplicity(&self, v: u32) -> u32 {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    /// (value, multiplicity) pairs in ascending value order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// All values with multiplicity, ascending.
    pub fn expanded(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for (v, c) in self.entries() {
            out.extend(std::iter::repeat(v).take(c as usize));
        }
        out
    }
}

/// Parses a comma list of `v` / `v^m` tokens, preserving order.
pub(crate) fn parse_run_tokens(s: &str) -> Result<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    if s.trim().is_empty() {
        return Err(Error::Parse("empty literal".into()));
    }
    for tok in s.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(Error::Parse("empty token in literal".into()));
        }
        let (v_str, m_str) = match tok.split_once('^') {
            Some((v, m)) => (v.trim(), Some(m.trim())),
            None => (tok, None),
        };
        let v: u32 = v_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad value `{v_str}`")))?;
        let m: u32 = match m_str {
            Some(m) => m
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity `{m}`")))?,
            None => 1,
        };
        if v == 0 {
            return Err(Error::Parse("values must be positive".into()));
        }
        if m == 0 {
            return Err(Error::Parse("multiplicities must be positive".into()));
        }
        out.push((v, m));
    }
    Ok(out)
}

impl FromStr for Multiset {
    type Err = Error;

    /// Literal form `1^2,2^2,3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let runs = parse_run_tokens(s)?;
        Multiset::from_values(
            runs.iter()
                .flat_map(|&(v, m)| std::iter::repeat(v).take(m as usize)),
        )
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, c) in self.entries() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{c}")?;
            }
        }
        Ok(())
    }
}
