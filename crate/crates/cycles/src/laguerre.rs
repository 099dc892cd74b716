use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Step of a 2-Motzkin path. The derived order U < D < L0 < L1 is the
/// enumeration order contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    Level0,
    Level1,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Up, Step::Down, Step::Level0, Step::Level1];

    pub fn delta(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Level0 | Step::Level1 => 0,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Step::Up => "U",
            Step::Down => "D",
            Step::Level0 => "L0",
            Step::Level1 => "L1",
        }
    }
}

/// 2-Motzkin word together with one weight per step, the weight never
/// exceeding the height at which the step starts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaguerreHistory {
    steps: Vec<Step>,
    weights: Vec<u32>,
}

impl LaguerreHistory {
    pub fn new(steps: Vec<Step>, weights: Vec<u32>) -> Result<Self> {
        if steps.len() != weights.len() {
            return Err(Error::Domain(format!(
                "{} steps but {} weights",
                steps.len(),
                weights.len()
            )));
        }
        let mut h: u32 = 0;
        for (i, (&s, &w)) in steps.iter().zip(&weights).enumerate() {
            if w > h {
                return Err(Error::Domain(format!(
                    "weight {} at step {} exceeds height {}",
                    w,
                    i + 1,
                    h
                )));
            }
            match s {
                Step::Up => h += 1,
                Step::Down => {
                    h = h.checked_sub(1).ok_or_else(|| {
                        Error::Domain(format!("path dips below zero at step {}", i + 1))
                    })?;
                }
                Step::Level0 | Step::Level1 => {}
            }
        }
        if h != 0 {
            return Err(Error::Domain(format!("path ends at height {h}, not 0")));
        }
        Ok(LaguerreHistory { steps, weights })
    }

    pub fn empty() -> Self {
        LaguerreHistory {
            steps: Vec::new(),
            weights: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Height at which each step starts.
    pub fn start_heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut h: i32 = 0;
        for &s in &self.steps {
            out.push(h as u32);
            h += s.delta();
        }
        out
    }

    fn require_even(&self) -> Result<()> {
        if self.steps.len() % 2 == 0 {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "shape test needs even length, got {}",
                self.steps.len()
            )))
        }
    }

    /// Shape of the histories that encode odd-even-descent words: down or
    /// plain level at odd positions, up or plain level at even positions.
    pub fn is_soe_shaped(&self) -> Result<bool> {
        self.require_even()?;
        Ok(self.steps.iter().enumerate().all(|(i, &s)| {
            if i % 2 == 0 {
                matches!(s, Step::Down | Step::Level0)
            } else {
                matches!(s, Step::Up | Step::Level0)
            }
        }))
    }

    /// Shape of the histories that encode Dumont words: up or plain level at
    /// odd positions, down or marked level at even positions, with a strictly
    /// positive weight on every even position.
    pub fn is_dumont_shaped(&self) -> Result<bool> {
        self.require_even()?;
        Ok(self.steps.iter().enumerate().all(|(i, &s)| {
            if i % 2 == 0 {
                matches!(s, Step::Up | Step::Level0)
            } else {
                matches!(s, Step::Down | Step::Level1) && self.weights[i] >= 1
            }
        }))
    }
}

impl fmt::Display for LaguerreHistory {
    /// `(UUL0UDDL1D; 0,1,0,0,3,1,1,1)`, or `(;)` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "(;)");
        }
        let word: String = self.steps.iter().map(|s| s.token()).collect();
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({}; {})", word, ws.join(","))
    }
}

fn parse_word(s: &str) -> Result<Vec<Step>> {
    let mut out = Vec::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        out.push(match c {
            'U' => Step::Up,
            'D' => Step::Down,
            'L' => match chars.next() {
                Some('0') => Step::Level0,
                Some('1') => Step::Level1,
                _ => return Err(Error::Parse("L must be followed by 0 or 1".into())),
            },
            other => return Err(Error::Parse(format!("unexpected step letter {other:?}"))),
        });
    }
    Ok(out)
}

impl FromStr for LaguerreHistory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse("history literal needs surrounding parentheses".into()))?;
        let (word_part, weight_part) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse("history literal needs a semicolon".into()))?;
        let steps = parse_word(word_part.trim())?;
        let weight_part = weight_part.trim();
        let weights = if weight_part.is_empty() {
            Vec::new()
        } else {
            weight_part
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad weight {t:?}: {e}")))
                })
                .collect::<Result<Vec<u32>>>()?
        };
        LaguerreHistory::new(steps, weights).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> LaguerreHistory {
        s.parse().unwrap()
    }

    #[test]
    fn step_order_and_deltas() {
        assert!(Step::Up < Step::Down && Step::Down < Step::Level0 && Step::Level0 < Step::Level1);
        assert_eq!(Step::ALL.map(Step::delta), [1, -1, 0, 0]);
    }

    #[test]
    fn display_parse_round_trip() {
        let lit = "(UUL0UDDL1D; 0,1,0,0,3,1,1,1)";
        let hist = h(lit);
        assert_eq!(hist.len(), 8);
        assert_eq!(hist.to_string(), lit);
        assert_eq!(hist.start_heights(), vec![0, 1, 2, 2, 3, 2, 1, 1]);

        let empty = h("(;)");
        assert!(empty.is_empty());
        assert_eq!(empty.to_string(), "(;)");
        assert_eq!(empty, LaguerreHistory::empty());
    }

    #[test]
    fn rejects_invalid_histories() {
        use Step::*;
        // weight above starting height
        assert!(LaguerreHistory::new(vec![Up, Down], vec![1, 1]).is_err());
        // dips below zero
        assert!(LaguerreHistory::new(vec![Down, Up], vec![0, 0]).is_err());
        // open path
        assert!(LaguerreHistory::new(vec![Up, Level0], vec![0, 0]).is_err());
        // length mismatch
        assert!(LaguerreHistory::new(vec![Level0], vec![]).is_err());
        assert!("(L0; 1)".parse::<LaguerreHistory>().is_err());
        assert!("(L2; 0)".parse::<LaguerreHistory>().is_err());
        assert!("(L0 0)".parse::<LaguerreHistory>().is_err());
    }

    #[test]
    fn shape_predicates() {
        for lit in ["(L0L0L0L0; 0,0,0,0)", "(L0UDL0; 0,0,1,0)", "(L0UDL0; 0,0,0,0)"] {
            assert!(h(lit).is_soe_shaped().unwrap(), "{lit}");
            assert!(!h(lit).is_dumont_shaped().unwrap(), "{lit}");
        }
        for lit in ["(UDUD; 0,1,0,1)", "(UL1L0D; 0,1,0,1)", "(UL1L0D; 0,1,1,1)"] {
            assert!(h(lit).is_dumont_shaped().unwrap(), "{lit}");
            assert!(!h(lit).is_soe_shaped().unwrap(), "{lit}");
        }
        // zero weight on an even position disqualifies the dumont shape
        assert!(!h("(UDUD; 0,1,0,0)").is_dumont_shaped().unwrap());
        // odd length is a caller error, not a false
        assert!(h("(UL0D; 0,0,0)").is_soe_shaped().is_err());
        assert!(h("(UL0D; 0,0,0)").is_dumont_shaped().is_err());
        assert!(h("(;)").is_soe_shaped().unwrap());
        assert!(h("(;)").is_dumont_shaped().unwrap());
    }
}
