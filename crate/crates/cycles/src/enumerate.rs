//! Streaming generators for the four object families, each a depth-first
//! walk that prunes as it extends, plus brute-force counterparts in [`brute`]
//! that filter everything and exist to keep the generators honest.
//!
//! Output order is deterministic: cycles come in lexicographic order of their
//! canonical sequences, words in lexicographic order, histories ordered by
//! step word (U < D < L0 < L1) and then by weight vector. That matches the
//! derived `Ord` on each type, so a generator's stream is always strictly
//! increasing.

use crate::cycle::{dc_pair_ok, ec_pair_ok, is_least_rotation, Cycle};
use crate::error::{Error, Result};
use crate::laguerre::{LaguerreHistory, Step};
use crate::multiset::Multiset;
use crate::perm::Permutation;

/// Cycle families distinguished by their drop condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleFamily {
    /// Every cyclic drop falls from an even letter onto an odd one.
    EvenOddDrop,
    /// Odd letters sit in weak ascents, even letters in weak descents.
    DCycle,
}

impl CycleFamily {
    pub(crate) fn pair_ok(self, a: u32, b: u32) -> bool {
        match self {
            CycleFamily::EvenOddDrop => ec_pair_ok(a, b),
            CycleFamily::DCycle => dc_pair_ok(a, b),
        }
    }
}

/// Word families distinguished by their descent condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PermFamily {
    /// Descents at exactly the even letters.
    Dumont,
    /// Descents only from odd onto even, last letter odd.
    OddEvenDescent,
}

impl PermFamily {
    fn pair_ok(self, a: u32, b: u32) -> bool {
        match self {
            PermFamily::Dumont => (a > b) == (a % 2 == 0),
            PermFamily::OddEvenDescent => a < b || (a % 2 == 1 && b % 2 == 0),
        }
    }

    fn complete_ok(self, last: u32) -> bool {
        match self {
            PermFamily::Dumont => true,
            PermFamily::OddEvenDescent => last % 2 == 1,
        }
    }
}

/// History families: unrestricted, or one of the two alternating shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HistoryFamily {
    All,
    /// Odd positions D or L0, even positions U or L0.
    SoeShaped,
    /// Odd positions U or L0, even positions D or L1 with positive weight.
    DumontShaped,
}

impl HistoryFamily {
    /// Steps permitted at 1-based position `pos`, in enumeration order.
    fn allowed(self, pos: usize) -> &'static [Step] {
        use Step::*;
        match (self, pos % 2 == 1) {
            (HistoryFamily::All, _) => &[Up, Down, Level0, Level1],
            (HistoryFamily::SoeShaped, true) => &[Down, Level0],
            (HistoryFamily::SoeShaped, false) => &[Up, Level0],
            (HistoryFamily::DumontShaped, true) => &[Up, Level0],
            (HistoryFamily::DumontShaped, false) => &[Down, Level1],
        }
    }

    /// Smallest weight allowed at 1-based position `pos`.
    fn weight_floor(self, pos: usize) -> u32 {
        if self == HistoryFamily::DumontShaped && pos % 2 == 0 {
            1
        } else {
            0
        }
    }

    /// How many positions in `from_pos..=total` may carry a D step. A prefix
    /// ending higher than this cannot come back down to the axis.
    fn down_capacity(self, from_pos: usize, total: usize) -> u32 {
        if from_pos > total {
            return 0;
        }
        let count = match self {
            HistoryFamily::All => total + 1 - from_pos,
            // odd positions in from_pos..=total
            HistoryFamily::SoeShaped => (total + 1) / 2 - from_pos / 2,
            // even positions in from_pos..=total
            HistoryFamily::DumontShaped => total / 2 - (from_pos - 1) / 2,
        };
        count as u32
    }
}

/// Streams one cycle family over a fixed content multiset. The first letter
/// is pinned to the least value, each extension must satisfy the family's
/// pair condition, and a complete sequence is emitted only if the wrap pair
/// holds and the sequence is its own least rotation.
pub struct CycleIter {
    family: CycleFamily,
    values: Vec<u32>,
    remaining: Vec<u32>,
    seq: Vec<u32>,
    choices: Vec<usize>,
    next_idx: usize,
    total: usize,
    started: bool,
    advancing: bool,
    done: bool,
}

impl CycleIter {
    pub fn new(family: CycleFamily, content: &Multiset) -> Result<Self> {
        let least = content
            .min_value()
            .ok_or_else(|| Error::Domain("cycles need a nonempty content multiset".into()))?;
        let values: Vec<u32> = content.entries().map(|(v, _)| v).collect();
        let mut remaining: Vec<u32> = content.entries().map(|(_, c)| c).collect();
        remaining[0] -= 1; // canonical sequences start at the least value
        Ok(CycleIter {
            family,
            values,
            remaining,
            seq: vec![least],
            choices: Vec::new(),
            next_idx: 0,
            total: content.size(),
            started: false,
            advancing: false,
            done: false,
        })
    }
}

impl Iterator for CycleIter {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.total == 1 {
                // the 1-cycle has no pairs to check and belongs to both families
                self.done = true;
                return Some(Cycle::from_canonical(self.seq.clone()));
            }
        }
        loop {
            if self.advancing {
                let Some(idx) = self.choices.pop() else {
                    self.done = true;
                    return None;
                };
                self.remaining[idx] += 1;
                self.seq.pop();
                self.next_idx = idx + 1;
                self.advancing = false;
            }
            let prev = *self.seq.last().expect("anchor stays in place");
            let found = (self.next_idx..self.values.len())
                .find(|&i| self.remaining[i] > 0 && self.family.pair_ok(prev, self.values[i]));
            match found {
                Some(i) => {
                    self.remaining[i] -= 1;
                    self.seq.push(self.values[i]);
                    self.choices.push(i);
                    self.next_idx = 0;
                    if self.seq.len() == self.total {
                        self.advancing = true;
                        if self.family.pair_ok(self.values[i], self.seq[0])
                            && is_least_rotation(&self.seq)
                        {
                            return Some(Cycle::from_canonical(self.seq.clone()));
                        }
                    }
                }
                None => self.advancing = true,
            }
        }
    }
}

/// Streams one word family on [n] in lexicographic order. Both families are
/// empty for even n, so even n is refused outright.
pub struct PermIter {
    family: PermFamily,
    n: u32,
    used: Vec<bool>,
    word: Vec<u32>,
    next_val: u32,
    advancing: bool,
    done: bool,
}

impl PermIter {
    pub fn new(family: PermFamily, n: u32) -> Result<Self> {
        if n == 0 || n % 2 == 0 {
            return Err(Error::Domain(format!(
                "the word families live on odd lengths, got {n}"
            )));
        }
        Ok(PermIter {
            family,
            n,
            used: vec![false; n as usize],
            word: Vec::with_capacity(n as usize),
            next_val: 1,
            advancing: false,
            done: false,
        })
    }
}

impl Iterator for PermIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        loop {
            if self.advancing {
                let Some(v) = self.word.pop() else {
                    self.done = true;
                    return None;
                };
                self.used[v as usize - 1] = false;
                self.next_val = v + 1;
                self.advancing = false;
            }
            let prev = self.word.last().copied();
            let found = (self.next_val..=self.n).find(|&v| {
                !self.used[v as usize - 1] && prev.map_or(true, |p| self.family.pair_ok(p, v))
            });
            match found {
                Some(v) => {
                    self.used[v as usize - 1] = true;
                    self.word.push(v);
                    self.next_val = 1;
                    if self.word.len() == self.n as usize {
                        self.advancing = true;
                        if self.family.complete_ok(v) {
                            return Some(
                                Permutation::new(self.word.clone()).expect("word built from 1..=n"),
                            );
                        }
                    }
                }
                None => self.advancing = true,
            }
        }
    }
}

/// Streams one history family of a fixed length: a depth-first walk over step
/// words with height pruning, and for each word an odometer over the weight
/// vectors.
pub struct HistoryIter {
    family: HistoryFamily,
    total: usize,
    steps: Vec<Step>,
    step_idx: Vec<usize>,
    heights: Vec<u32>,
    height: u32,
    weights: Vec<u32>,
    next_choice: usize,
    word_active: bool,
    advancing: bool,
    started: bool,
    done: bool,
}

impl HistoryIter {
    pub fn new(family: HistoryFamily, n: u32) -> Result<Self> {
        if family != HistoryFamily::All && n % 2 != 0 {
            return Err(Error::Domain(format!(
                "the shaped history families live on even lengths, got {n}"
            )));
        }
        Ok(HistoryIter {
            family,
            total: n as usize,
            steps: Vec::with_capacity(n as usize),
            step_idx: Vec::with_capacity(n as usize),
            heights: Vec::with_capacity(n as usize),
            height: 0,
            weights: Vec::new(),
            next_choice: 0,
            word_active: false,
            advancing: false,
            started: false,
            done: false,
        })
    }

    /// Can `s` extend the current prefix into position `pos` and still close?
    fn viable(&self, s: Step, pos: usize) -> bool {
        let h = self.height;
        if self.family.weight_floor(pos) > h {
            return false;
        }
        if s == Step::Down && h == 0 {
            return false;
        }
        let after = (h as i32 + s.delta()) as u32;
        after <= self.family.down_capacity(pos + 1, self.total)
    }

    fn emit(&self) -> LaguerreHistory {
        LaguerreHistory::new(self.steps.clone(), self.weights.clone())
            .expect("generated histories are valid")
    }
}

impl Iterator for HistoryIter {
    type Item = LaguerreHistory;

    fn next(&mut self) -> Option<LaguerreHistory> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.total == 0 {
                self.done = true;
                return Some(LaguerreHistory::empty());
            }
        }
        loop {
            if self.word_active {
                // next weight vector for the current word, rightmost first
                if let Some(j) = (0..self.total).rev().find(|&j| self.weights[j] < self.heights[j])
                {
                    self.weights[j] += 1;
                    for k in j + 1..self.total {
                        self.weights[k] = self.family.weight_floor(k + 1);
                    }
                    return Some(self.emit());
                }
                self.word_active = false;
                self.advancing = true;
            }
            if self.advancing {
                if self.steps.is_empty() {
                    self.done = true;
                    return None;
                }
                let i = self.step_idx.pop().expect("aligned with steps");
                let s = self.steps.pop().expect("nonempty");
                self.heights.pop();
                self.height = (self.height as i32 - s.delta()) as u32;
                self.next_choice = i + 1;
                self.advancing = false;
            }
            let pos = self.steps.len() + 1;
            let allowed = self.family.allowed(pos);
            let found = (self.next_choice..allowed.len()).find(|&i| self.viable(allowed[i], pos));
            match found {
                Some(i) => {
                    let s = allowed[i];
                    self.steps.push(s);
                    self.step_idx.push(i);
                    self.heights.push(self.height);
                    self.height = (self.height as i32 + s.delta()) as u32;
                    self.next_choice = 0;
                    if self.steps.len() == self.total {
                        debug_assert_eq!(self.height, 0);
                        self.weights = (0..self.total)
                            .map(|j| self.family.weight_floor(j + 1))
                            .collect();
                        self.word_active = true;
                        return Some(self.emit());
                    }
                }
                None => self.advancing = true,
            }
        }
    }
}

pub mod brute {
    //! Filter-everything counterparts of the generators. They enumerate a
    //! whole ambient space and keep what passes the membership test, so they
    //! are immune to pruning bugs and unusable beyond small sizes; the size
    //! guards refuse anything bigger unless explicitly lifted.

    use std::collections::BTreeSet;

    use super::{CycleFamily, HistoryFamily, PermFamily};
    use crate::cycle::Cycle;
    use crate::error::{Error, Result};
    use crate::laguerre::{LaguerreHistory, Step};
    use crate::multiset::Multiset;
    use crate::perm::Permutation;

    pub const MAX_MULTISET_SIZE: usize = 10;
    pub const MAX_PERM_LEN: u32 = 10;
    pub const MAX_HISTORY_LEN: u32 = 10;

    /// Steps `w` to the next arrangement in lexicographic order, handling
    /// repeated values; false once `w` is the last one.
    pub(crate) fn next_permutation(w: &mut [u32]) -> bool {
        if w.len() < 2 {
            return false;
        }
        let mut i = w.len() - 1;
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = w.len() - 1;
        while w[j] <= w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }

    /// All cycles of the family on the content, by filtering every distinct
    /// arrangement.
    pub fn cycle_set(
        family: CycleFamily,
        content: &Multiset,
        lift_guard: bool,
    ) -> Result<BTreeSet<Cycle>> {
        if !lift_guard && content.size() > MAX_MULTISET_SIZE {
            return Err(Error::Guard(format!(
                "content size {} is over the brute-force limit {MAX_MULTISET_SIZE}",
                content.size()
            )));
        }
        if content.is_empty() {
            return Err(Error::Domain("cycles need a nonempty content multiset".into()));
        }
        let mut word = content.expanded();
        let mut out = BTreeSet::new();
        loop {
            let c = Cycle::new(word.clone())?;
            let keep = match family {
                CycleFamily::EvenOddDrop => c.has_even_odd_drops_only(),
                CycleFamily::DCycle => c.is_d_cycle(),
            };
            if keep {
                out.insert(c);
            }
            if !next_permutation(&mut word) {
                break;
            }
        }
        Ok(out)
    }

    /// All words of the family on [n], by filtering every arrangement.
    pub fn perm_set(family: PermFamily, n: u32, lift_guard: bool) -> Result<BTreeSet<Permutation>> {
        if !lift_guard && n > MAX_PERM_LEN {
            return Err(Error::Guard(format!(
                "word length {n} is over the brute-force limit {MAX_PERM_LEN}"
            )));
        }
        if n == 0 || n % 2 == 0 {
            return Err(Error::Domain(format!(
                "the word families live on odd lengths, got {n}"
            )));
        }
        let mut word: Vec<u32> = (1..=n).collect();
        let mut out = BTreeSet::new();
        loop {
            let p = Permutation::new(word.clone())?;
            let keep = match family {
                PermFamily::Dumont => p.is_dumont(),
                PermFamily::OddEvenDescent => p.is_soe(),
            };
            if keep {
                out.insert(p);
            }
            if !next_permutation(&mut word) {
                break;
            }
        }
        Ok(out)
    }

    /// All histories of the family of length n, by walking every step word
    /// in the full 4^n space and every weight vector under it.
    pub fn history_set(
        family: HistoryFamily,
        n: u32,
        lift_guard: bool,
    ) -> Result<BTreeSet<LaguerreHistory>> {
        if !lift_guard && n > MAX_HISTORY_LEN {
            return Err(Error::Guard(format!(
                "history length {n} is over the brute-force limit {MAX_HISTORY_LEN}"
            )));
        }
        if family != HistoryFamily::All && n % 2 != 0 {
            return Err(Error::Domain(format!(
                "the shaped history families live on even lengths, got {n}"
            )));
        }
        let n = n as usize;
        let mut out = BTreeSet::new();
        for code in 0..4usize.pow(n as u32) {
            let mut steps = Vec::with_capacity(n);
            let mut x = code;
            for _ in 0..n {
                steps.push(Step::ALL[x % 4]);
                x /= 4;
            }
            let mut h: i32 = 0;
            let mut heights = Vec::with_capacity(n);
            let mut ok = true;
            for &s in &steps {
                heights.push(h as u32);
                h += s.delta();
                if h < 0 {
                    ok = false;
                    break;
                }
            }
            if !ok || h != 0 {
                continue;
            }
            let mut weights = vec![0u32; n];
            loop {
                let hist = LaguerreHistory::new(steps.clone(), weights.clone())?;
                let keep = match family {
                    HistoryFamily::All => true,
                    HistoryFamily::SoeShaped => hist.is_soe_shaped()?,
                    HistoryFamily::DumontShaped => hist.is_dumont_shaped()?,
                };
                if keep {
                    out.insert(hist);
                }
                match (0..n).rev().find(|&j| weights[j] < heights[j]) {
                    Some(j) => {
                        weights[j] += 1;
                        for w in &mut weights[j + 1..] {
                            *w = 0;
                        }
                    }
                    None => break,
                }
            }
        }
        Ok(out)
    }
}
