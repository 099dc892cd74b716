use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multiset::{parse_run_tokens, Multiset};

/// Cyclic word over positive integers, stored as its lexicographically least
/// rotation. Equality and ordering therefore work on cyclic arrangements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    seq: Vec<u32>,
}

/// Index of the lexicographically least rotation start.
fn least_rotation_start(seq: &[u32]) -> usize {
    let m = seq.len();
    let mut best = 0;
    for cand in 1..m {
        for k in 0..m {
            let a = seq[(cand + k) % m];
            let b = seq[(best + k) % m];
            if a != b {
                if a < b {
                    best = cand;
                }
                break;
            }
        }
    }
    best
}

/// True when no other rotation is strictly smaller.
pub(crate) fn is_least_rotation(seq: &[u32]) -> bool {
    let m = seq.len();
    for cand in 1..m {
        for k in 0..m {
            let a = seq[(cand + k) % m];
            if a != seq[k] {
                if a < seq[k] {
                    return false;
                }
                break;
            }
        }
    }
    true
}

/// Adjacent pair rule for cycles whose drops all go even to odd.
pub(crate) fn ec_pair_ok(a: u32, b: u32) -> bool {
    a <= b || (a % 2 == 0 && b % 2 == 1)
}

/// Adjacent pair rule for d-cycles: odd letters never drop, even letters
/// never rise.
pub(crate) fn dc_pair_ok(a: u32, b: u32) -> bool {
    if a % 2 == 1 {
        a <= b
    } else {
        a >= b
    }
}

impl Cycle {
    pub fn new(seq: Vec<u32>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Domain("empty cycle".into()));
        }
        if seq.iter().any(|&v| v == 0) {
            return Err(Error::Domain("cycle values must be positive".into()));
        }
        let start = least_rotation_start(&seq);
        let mut rotated = Vec::with_capacity(seq.len());
        rotated.extend_from_slice(&seq[start..]);
        rotated.extend_from_slice(&seq[..start]);
        Ok(Cycle { seq: rotated })
    }

    /// Wraps a sequence already known to be its least rotation.
    pub(crate) fn from_canonical(seq: Vec<u32>) -> Self {
        debug_assert!(!seq.is_empty() && is_least_rotation(&seq));
        Cycle { seq }
    }

    /// The canonical rotation.
    pub fn seq(&self) -> &[u32] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiset(&self) -> Multiset {
        Multiset::from_values(self.seq.iter().copied()).expect("cycle values are positive")
    }

    fn cyclic_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let m = self.seq.len();
        (0..m).map(move |i| (self.seq[i], self.seq[(i + 1) % m]))
    }

    /// True when every strict drop a > b has a even and b odd.
    pub fn has_even_odd_drops_only(&self) -> bool {
        self.cyclic_pairs().all(|(a, b)| ec_pair_ok(a, b))
    }

    /// True when odd letters never exceed their successor and even letters
    /// never fall below it.
    pub fn is_d_cycle(&self) -> bool {
        self.cyclic_pairs().all(|(a, b)| dc_pair_ok(a, b))
    }

    /// Run-length form. The canonical rotation never splits a run across the
    /// wrap unless the cycle is constant.
    pub fn compact(&self) -> CompactCycle {
        let mut bundles: Vec<Bundle> = Vec::new();
        for &v in &self.seq {
            match bundles.last_mut() {
                Some(b) if b.value == v => b.mult += 1,
                _ => bundles.push(Bundle { value: v, mult: 1 }),
            }
        }
        if bundles.len() > 1 {
            debug_assert_ne!(bundles[0].value, bundles.last().unwrap().value);
        }
        CompactCycle { bundles }
    }
}

impl FromStr for Cycle {
    type Err = Error;

    /// Literal form `(1,2^2,4^3,6)`; exponents expand in place.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse("cycle literal needs surrounding parentheses".into()))?;
        let runs = parse_run_tokens(inner)?;
        let mut seq = Vec::new();
        for (v, m) in runs {
            seq.extend(std::iter::repeat(v).take(m as usize));
        }
        Cycle::new(seq).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Maximal run of equal letters inside a compact cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bundle {
    pub value: u32,
    pub mult: u32,
}

/// Run-length form of a canonical cycle; cyclically adjacent bundles carry
/// distinct values whenever there are at least two of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactCycle {
    bundles: Vec<Bundle>,
}

impl CompactCycle {
    pub fn bundles(&self) -> &[Bundle] {
        &self.bundles
    }

    pub fn len(&self) -> usize {
        self.bundles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn expand(&self) -> Cycle {
        let mut seq = Vec::new();
        for b in &self.bundles {
            seq.extend(std::iter::repeat(b.value).take(b.mult as usize));
        }
        Cycle::from_canonical(seq)
    }

    /// Indices of even-valued bundles sitting strictly between smaller
    /// cyclic neighbours.
    pub fn even_double_ascents(&self) -> Vec<usize> {
        self.parity_extremes(|prev, v, next| prev < v && v < next)
    }

    /// Indices of even-valued bundles sitting strictly between larger
    /// cyclic neighbours.
    pub fn even_double_descents(&self) -> Vec<usize> {
        self.parity_extremes(|prev, v, next| prev > v && v > next)
    }

    fn parity_extremes(&self, keep: impl Fn(u32, u32, u32) -> bool) -> Vec<usize> {
        let k = self.bundles.len();
        (0..k)
            .filter(|&i| {
                let v = self.bundles[i].value;
                let prev = self.bundles[(i + k - 1) % k].value;
                let next = self.bundles[(i + 1) % k].value;
                v % 2 == 0 && keep(prev, v, next)
            })
            .collect()
    }
}

impl fmt::Display for CompactCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bundles
            .iter()
            .map(|b| {
                if b.mult == 1 {
                    b.value.to_string()
                } else {
                    format!("{}^{}", b.value, b.mult)
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}
