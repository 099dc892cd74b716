//! The maps tying the cycle families to Dumont permutations: a shift between
//! cycles and odd-even-descent words, the Françon-Viennot encoding into
//! Laguerre histories, a pairwise history reshaping, bundle surgery between
//! the two cycle families, and the cut that turns a d-cycle into a Dumont
//! word. Two composite routes from even-odd-drop cycles to Dumont words fall
//! out: one through histories, one through cycles.

use crate::cycle::{Bundle, Cycle};
use crate::error::{Error, Result};
use crate::laguerre::{LaguerreHistory, Step};
use crate::perm::{LetterClass, Permutation};

/// Checks that the cycle's content is exactly the set {1, ..., m} and
/// returns m.
fn ground_set_size(c: &Cycle) -> Result<u32> {
    let m = c.len() as u32;
    let content = c.multiset();
    if content.distinct() == c.len() && content.max_value() == Some(m) {
        Ok(m)
    } else {
        Err(Error::Domain(format!(
            "cycle content must be exactly the set 1..{m}"
        )))
    }
}

/// Cuts an even-odd-drop cycle on [2n] after its leading 1 and shifts every
/// letter down by one, leaving an odd-even-descent word on [2n-1].
pub fn cycle_to_soe(c: &Cycle) -> Result<Permutation> {
    let m = ground_set_size(c)?;
    if m % 2 != 0 {
        return Err(Error::Domain(format!("ground set size {m} is odd")));
    }
    if !c.has_even_odd_drops_only() {
        return Err(Error::Domain(format!("{c} has a drop that is not even-odd")));
    }
    // the canonical rotation of a set cycle starts at 1
    let word: Vec<u32> = c.seq()[1..].iter().map(|&v| v - 1).collect();
    let p = Permutation::new(word)?;
    debug_assert!(p.is_soe());
    Ok(p)
}

/// Undoes the shift: raise every letter by one, put the 1 back in front, and
/// close the word into a cycle.
pub fn soe_to_cycle(p: &Permutation) -> Result<Cycle> {
    if !p.is_soe() {
        return Err(Error::Domain(format!(
            "{p} has a descent that is not odd-even, or ends on an even letter"
        )));
    }
    let mut seq = Vec::with_capacity(p.len() + 1);
    seq.push(1);
    seq.extend(p.word().iter().map(|&v| v + 1));
    let c = Cycle::new(seq)?;
    debug_assert!(c.has_even_odd_drops_only());
    Ok(c)
}

fn class_step(class: LetterClass) -> Step {
    match class {
        LetterClass::Valley => Step::Up,
        LetterClass::Peak => Step::Down,
        LetterClass::DoubleAscent => Step::Level0,
        LetterClass::DoubleDescent => Step::Level1,
    }
}

/// Françon-Viennot encoding: one step per letter 1..n-1, taken from the
/// letter's neighbourhood class, weighted by its straddling-pair statistic.
/// The top letter n is left implicit.
pub fn perm_to_history(p: &Permutation) -> Result<LaguerreHistory> {
    let n = p.len() as u32;
    let mut steps = Vec::with_capacity(p.len().saturating_sub(1));
    let mut weights = Vec::with_capacity(p.len().saturating_sub(1));
    for v in 1..n {
        steps.push(class_step(p.classify(v)?));
        weights.push(p.stat_2_13(v)?);
    }
    LaguerreHistory::new(steps, weights)
        .map_err(|e| Error::Internal(format!("encoding produced an invalid history: {e}")))
}

/// Decodes a history by slot insertion: letter i replaces the (weight+1)-th
/// open slot counted from the right, leaving fresh slots on both sides for U,
/// on the right for L0, on the left for L1, and none for D; the last open
/// slot takes the top letter.
pub fn history_to_perm(hist: &LaguerreHistory) -> Result<Permutation> {
    #[derive(Clone, Copy)]
    enum Item {
        Letter(u32),
        Slot,
    }
    let mut items = vec![Item::Slot];
    for (i, (&s, &w)) in hist.steps().iter().zip(hist.weights()).enumerate() {
        let letter = i as u32 + 1;
        let slots: Vec<usize> = items
            .iter()
            .enumerate()
            .filter_map(|(j, it)| matches!(it, Item::Slot).then_some(j))
            .collect();
        let idx = slots
            .len()
            .checked_sub(1 + w as usize)
            .map(|k| slots[k])
            .ok_or_else(|| {
                Error::Internal(format!("step {} weight {w} has no slot to fill", i + 1))
            })?;
        let replacement: Vec<Item> = match s {
            Step::Up => vec![Item::Slot, Item::Letter(letter), Item::Slot],
            Step::Level0 => vec![Item::Letter(letter), Item::Slot],
            Step::Level1 => vec![Item::Slot, Item::Letter(letter)],
            Step::Down => vec![Item::Letter(letter)],
        };
        items.splice(idx..=idx, replacement);
    }
    let top = hist.len() as u32 + 1;
    let word: Vec<u32> = items
        .iter()
        .map(|it| match it {
            Item::Letter(v) => *v,
            Item::Slot => top,
        })
        .collect();
    debug_assert_eq!(word.iter().filter(|&&v| v == top).count(), 1);
    Permutation::new(word)
}

/// Rewrites each consecutive step pair of an soe-shaped history and bumps the
/// second weight, producing a dumont-shaped history of the same length.
pub fn reshape_to_dumont(hist: &LaguerreHistory) -> Result<LaguerreHistory> {
    if !hist.is_soe_shaped()? {
        return Err(Error::Domain("history does not have the soe shape".into()));
    }
    let mut steps = hist.steps().to_vec();
    let mut weights = hist.weights().to_vec();
    for j in (0..steps.len()).step_by(2) {
        let pair = match (steps[j], steps[j + 1]) {
            (Step::Level0, Step::Level0) => (Step::Up, Step::Down),
            (Step::Down, Step::Up) => (Step::Level0, Step::Level1),
            (Step::Level0, Step::Up) => (Step::Up, Step::Level1),
            (Step::Down, Step::Level0) => (Step::Level0, Step::Down),
            other => return Err(Error::Internal(format!("unexpected step pair {other:?}"))),
        };
        steps[j] = pair.0;
        steps[j + 1] = pair.1;
        weights[j + 1] += 1;
    }
    let out = LaguerreHistory::new(steps, weights)
        .map_err(|e| Error::Internal(format!("reshape produced an invalid history: {e}")))?;
    debug_assert!(out.is_dumont_shaped().unwrap_or(false));
    Ok(out)
}

/// Inverse reshaping: restore each step pair and drop the second weight back
/// down by one.
pub fn reshape_to_soe(hist: &LaguerreHistory) -> Result<LaguerreHistory> {
    if !hist.is_dumont_shaped()? {
        return Err(Error::Domain("history does not have the dumont shape".into()));
    }
    let mut steps = hist.steps().to_vec();
    let mut weights = hist.weights().to_vec();
    for j in (0..steps.len()).step_by(2) {
        let pair = match (steps[j], steps[j + 1]) {
            (Step::Up, Step::Down) => (Step::Level0, Step::Level0),
            (Step::Level0, Step::Level1) => (Step::Down, Step::Up),
            (Step::Up, Step::Level1) => (Step::Level0, Step::Up),
            (Step::Level0, Step::Down) => (Step::Down, Step::Level0),
            other => return Err(Error::Internal(format!("unexpected step pair {other:?}"))),
        };
        steps[j] = pair.0;
        steps[j + 1] = pair.1;
        weights[j + 1] -= 1; // >= 1 by the shape check
    }
    let out = LaguerreHistory::new(steps, weights)
        .map_err(|e| Error::Internal(format!("reshape produced an invalid history: {e}")))?;
    debug_assert!(out.is_soe_shaped().unwrap_or(false));
    Ok(out)
}

fn validate_order(order: &[usize], movable: usize) -> Result<()> {
    if order.len() != movable {
        return Err(Error::Domain(format!(
            "processing order lists {} of {movable} movable bundles",
            order.len()
        )));
    }
    let mut seen = vec![false; movable];
    for &i in order {
        if i >= movable || seen[i] {
            return Err(Error::Domain(
                "processing order is not a permutation of the movable bundles".into(),
            ));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Takes the bundle at `from` out and reinserts it immediately before the
/// first strictly smaller bundle found clockwise of the vacated spot.
fn move_bundle_clockwise(bundles: &mut Vec<(usize, Bundle)>, from: usize) -> Result<()> {
    let item = bundles.remove(from);
    let k = bundles.len();
    for off in 0..k {
        let j = (from + off) % k;
        if bundles[j].1.value < item.1.value {
            bundles.insert(j, item);
            return Ok(());
        }
    }
    Err(Error::Internal(
        "no strictly smaller bundle ahead of a moved bundle".into(),
    ))
}

/// Takes the bundle at `from` out and reinserts it immediately after the
/// first strictly smaller bundle found anticlockwise of the vacated spot.
fn move_bundle_anticlockwise(bundles: &mut Vec<(usize, Bundle)>, from: usize) -> Result<()> {
    let item = bundles.remove(from);
    let k = bundles.len();
    for off in 1..=k {
        let j = (from + k - off) % k;
        if bundles[j].1.value < item.1.value {
            bundles.insert(j + 1, item);
            return Ok(());
        }
    }
    Err(Error::Internal(
        "no strictly smaller bundle behind a moved bundle".into(),
    ))
}

fn rebuild(bundles: &[(usize, Bundle)]) -> Result<Cycle> {
    let mut seq = Vec::new();
    for &(_, b) in bundles {
        seq.extend(std::iter::repeat(b.value).take(b.mult as usize));
    }
    Cycle::new(seq)
}

/// Bundle surgery from even-odd-drop cycles to d-cycles on the same content:
/// every even bundle that sits on a cyclic double ascent is moved to just
/// before the nearest strictly smaller bundle clockwise.
pub fn ec_to_dc(c: &Cycle) -> Result<Cycle> {
    let movable = c.compact().even_double_ascents().len();
    let order: Vec<usize> = (0..movable).collect();
    ec_to_dc_ordered(c, &order)
}

/// The same surgery with an explicit processing order over the movable
/// bundles (indices into their clockwise listing). The result provably does
/// not depend on the order; this entry point exists so tests can confirm it.
pub fn ec_to_dc_ordered(c: &Cycle, order: &[usize]) -> Result<Cycle> {
    if !c.has_even_odd_drops_only() {
        return Err(Error::Domain(format!("{c} has a drop that is not even-odd")));
    }
    let compact = c.compact();
    let movable = compact.even_double_ascents();
    validate_order(order, movable.len())?;
    // bundles are tagged with their original index so later moves can find
    // them after earlier moves have shifted positions
    let mut tagged: Vec<(usize, Bundle)> = compact.bundles().iter().copied().enumerate().collect();
    for &pick in order {
        let id = movable[pick];
        let from = tagged
            .iter()
            .position(|&(tag, _)| tag == id)
            .expect("moved bundles stay present");
        move_bundle_clockwise(&mut tagged, from)?;
    }
    let out = rebuild(&tagged)?;
    debug_assert!(out.is_d_cycle());
    debug_assert_eq!(out.multiset(), c.multiset());
    Ok(out)
}

/// Inverse surgery: every even bundle on a cyclic double descent is moved to
/// just after the nearest strictly smaller bundle anticlockwise.
pub fn dc_to_ec(c: &Cycle) -> Result<Cycle> {
    if !c.is_d_cycle() {
        return Err(Error::Domain(format!("{c} is not a d-cycle")));
    }
    let compact = c.compact();
    let movable = compact.even_double_descents();
    let mut tagged: Vec<(usize, Bundle)> = compact.bundles().iter().copied().enumerate().collect();
    for &id in &movable {
        let from = tagged
            .iter()
            .position(|&(tag, _)| tag == id)
            .expect("moved bundles stay present");
        move_bundle_anticlockwise(&mut tagged, from)?;
    }
    let out = rebuild(&tagged)?;
    debug_assert!(out.has_even_odd_drops_only());
    debug_assert_eq!(out.multiset(), c.multiset());
    Ok(out)
}

/// Cuts a d-cycle on [2n] at its top letter: reading the cycle from just
/// after 2n around to just before it gives a Dumont word on [2n-1].
pub fn dc_to_dumont(c: &Cycle) -> Result<Permutation> {
    let m = ground_set_size(c)?;
    if m % 2 != 0 {
        return Err(Error::Domain(format!("ground set size {m} is odd")));
    }
    if !c.is_d_cycle() {
        return Err(Error::Domain(format!("{c} is not a d-cycle")));
    }
    let t = c.seq().iter().position(|&v| v == m).expect("top letter present");
    let mut word = Vec::with_capacity(c.len() - 1);
    word.extend_from_slice(&c.seq()[t + 1..]);
    word.extend_from_slice(&c.seq()[..t]);
    let p = Permutation::new(word)?;
    debug_assert!(p.is_dumont());
    Ok(p)
}

/// Closes a Dumont word on [2n-1] back into a d-cycle by appending 2n.
pub fn dumont_to_dc(p: &Permutation) -> Result<Cycle> {
    if p.len() % 2 == 0 {
        return Err(Error::Domain(format!("word length {} is even", p.len())));
    }
    if !p.is_dumont() {
        return Err(Error::Domain(format!(
            "{p} has a descent somewhere other than exactly the even letters"
        )));
    }
    let m = p.len() as u32 + 1;
    let mut seq = p.word().to_vec();
    seq.push(m);
    let c = Cycle::new(seq)?;
    debug_assert!(c.is_d_cycle());
    Ok(c)
}

/// Route one from even-odd-drop cycles on [2n] to Dumont words: shift, encode
/// as a history, reshape, decode.
pub fn ec_to_dumont_via_histories(c: &Cycle) -> Result<Permutation> {
    let soe = cycle_to_soe(c)?;
    let hist = perm_to_history(&soe)?;
    let reshaped = reshape_to_dumont(&hist)?;
    let p = history_to_perm(&reshaped)?;
    debug_assert!(p.is_dumont());
    Ok(p)
}

/// Inverse of the history route.
pub fn dumont_to_ec_via_histories(p: &Permutation) -> Result<Cycle> {
    if p.len() % 2 == 0 || !p.is_dumont() {
        return Err(Error::Domain(format!(
            "{p} is not a Dumont word of odd length"
        )));
    }
    let hist = perm_to_history(p)?;
    let reshaped = reshape_to_soe(&hist)?;
    let soe = history_to_perm(&reshaped)?;
    soe_to_cycle(&soe)
}

/// Route two: bundle surgery to a d-cycle, then the cut at the top letter.
pub fn ec_to_dumont_via_cycles(c: &Cycle) -> Result<Permutation> {
    dc_to_dumont(&ec_to_dc(c)?)
}

/// Inverse of the cycle route.
pub fn dumont_to_ec_via_cycles(p: &Permutation) -> Result<Cycle> {
    dc_to_ec(&dumont_to_dc(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cycle {
        s.parse().unwrap()
    }
    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }
    fn h(s: &str) -> LaguerreHistory {
        s.parse().unwrap()
    }

    #[test]
    fn shift_matches_known_pairs() {
        let pairs = [
            ("(1,2,3,4,5,6)", "12345"),
            ("(1,2,4,3,5,6)", "13245"),
            ("(1,2,5,6,3,4)", "14523"),
            ("(1,2)", "1"),
        ];
        for (cycle, word) in pairs {
            assert_eq!(cycle_to_soe(&c(cycle)).unwrap(), p(word), "{cycle}");
            assert_eq!(soe_to_cycle(&p(word)).unwrap(), c(cycle), "{word}");
        }
        // wrong content, odd ground set, failed predicate
        assert!(cycle_to_soe(&c("(1,2,2,4)")).is_err());
        assert!(cycle_to_soe(&c("(1)")).is_err());
        assert!(cycle_to_soe(&c("(1,3,2,4,5,6)")).is_err());
        assert!(soe_to_cycle(&p("21435")).is_err());
    }

    #[test]
    fn encoding_matches_worked_example() {
        assert_eq!(
            perm_to_history(&p("528713649")).unwrap(),
            h("(UUL0UDDL1D; 0,1,0,0,3,1,1,1)")
        );
        assert_eq!(perm_to_history(&p("12345")).unwrap(), h("(L0L0L0L0; 0,0,0,0)"));
        assert_eq!(perm_to_history(&p("1")).unwrap(), LaguerreHistory::empty());
    }

    #[test]
    fn decoding_matches_worked_example() {
        assert_eq!(history_to_perm(&h("(UL1UDL0D; 0,1,1,2,0,0)")).unwrap(), p("4372156"));
        assert_eq!(history_to_perm(&h("(UDUD; 0,1,0,1)")).unwrap(), p("21435"));
        assert_eq!(history_to_perm(&LaguerreHistory::empty()).unwrap(), p("1"));
        // the worked example round-trips
        assert_eq!(
            perm_to_history(&p("4372156")).unwrap(),
            h("(UL1UDL0D; 0,1,1,2,0,0)")
        );
        assert_eq!(
            history_to_perm(&perm_to_history(&p("528713649")).unwrap()).unwrap(),
            p("528713649")
        );
    }

    #[test]
    fn reshaping_matches_listed_pairs() {
        let pairs = [
            ("(L0L0L0L0; 0,0,0,0)", "(UDUD; 0,1,0,1)"),
            ("(L0UDL0; 0,0,0,0)", "(UL1L0D; 0,1,0,1)"),
            ("(L0UDL0; 0,0,1,0)", "(UL1L0D; 0,1,1,1)"),
        ];
        for (m, mstar) in pairs {
            assert_eq!(reshape_to_dumont(&h(m)).unwrap(), h(mstar), "{m}");
            assert_eq!(reshape_to_soe(&h(mstar)).unwrap(), h(m), "{mstar}");
        }
        assert!(reshape_to_dumont(&h("(UDUD; 0,1,0,1)")).is_err());
        assert!(reshape_to_soe(&h("(L0L0L0L0; 0,0,0,0)")).is_err());
    }

    #[test]
    fn surgery_matches_worked_example() {
        let input = c("(1,2^2,4^3,6,5^2,6,1^2,8,1^2,4,5,8,3^2,4)");
        let output = c("(1,6,5^2,6,4^3,2^2,1^2,8,1^2,5,8,4,3^2,4)");
        assert_eq!(ec_to_dc(&input).unwrap(), output);
        assert_eq!(dc_to_ec(&output).unwrap(), input);
        // canonical compact forms, frozen
        assert_eq!(
            input.compact().to_string(),
            "(1^2,4,5,8,3^2,4,1,2^2,4^3,6,5^2,6,1^2,8)"
        );
        assert_eq!(
            output.compact().to_string(),
            "(1^2,5,8,4,3^2,4,1,6,5^2,6,4^3,2^2,1^2,8)"
        );
    }

    #[test]
    fn surgery_small_cases() {
        assert_eq!(ec_to_dc(&c("(1,2)")).unwrap(), c("(1,2)"));
        assert_eq!(dc_to_ec(&c("(1,2)")).unwrap(), c("(1,2)"));
        assert_eq!(ec_to_dc(&c("(1,2,3,4,5,6)")).unwrap(), c("(1,3,5,6,4,2)"));
        assert_eq!(dc_to_ec(&c("(1,3,5,6,4,2)")).unwrap(), c("(1,2,3,4,5,6)"));
        // a constant cycle has nothing to move
        assert_eq!(ec_to_dc(&c("(2,2)")).unwrap(), c("(2,2)"));
        assert!(ec_to_dc(&c("(1,3,2,4,5,6)")).is_err());
        assert!(dc_to_ec(&c("(1,2,3,4,5,6)")).is_err());
    }

    #[test]
    fn surgery_order_does_not_matter() {
        let input = c("(1,2^2,4^3,6,5^2,6,1^2,8,1^2,4,5,8,3^2,4)");
        let expect = ec_to_dc(&input).unwrap();
        let orders = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        for order in &orders {
            assert_eq!(ec_to_dc_ordered(&input, order).unwrap(), expect, "{order:?}");
        }
        assert!(ec_to_dc_ordered(&input, &[0, 1]).is_err());
        assert!(ec_to_dc_ordered(&input, &[0, 1, 1]).is_err());
        assert!(ec_to_dc_ordered(&input, &[0, 1, 3]).is_err());
    }

    #[test]
    fn cut_matches_worked_example() {
        assert_eq!(dc_to_dumont(&c("(1,5,6,3,4,2)")).unwrap(), p("34215"));
        assert_eq!(dc_to_dumont(&c("(1,3,5,6,4,2)")).unwrap(), p("42135"));
        assert_eq!(dc_to_dumont(&c("(1,2)")).unwrap(), p("1"));
        assert_eq!(dumont_to_dc(&p("34215")).unwrap(), c("(1,5,6,3,4,2)"));
        assert_eq!(dumont_to_dc(&p("21435")).unwrap(), c("(1,4,3,5,6,2)"));
        assert_eq!(dumont_to_dc(&p("1")).unwrap(), c("(1,2)"));
        assert!(dc_to_dumont(&c("(1,2,2,4)")).is_err());
        assert!(dumont_to_dc(&p("12345")).is_err());
        // dumont-like words of even length do not close into d-cycles
        assert!(dumont_to_dc(&p("21")).is_err());
    }

    #[test]
    fn composite_routes_on_the_six_set() {
        // the two routes are both bijections here but pair differently
        let history_route = [
            ("(1,2,3,4,5,6)", "21435"),
            ("(1,2,4,3,5,6)", "34215"),
            ("(1,2,5,6,3,4)", "42135"),
        ];
        let cycle_route = [
            ("(1,2,3,4,5,6)", "42135"),
            ("(1,2,4,3,5,6)", "21435"),
            ("(1,2,5,6,3,4)", "34215"),
        ];
        for (cycle, word) in history_route {
            assert_eq!(ec_to_dumont_via_histories(&c(cycle)).unwrap(), p(word), "{cycle}");
            assert_eq!(dumont_to_ec_via_histories(&p(word)).unwrap(), c(cycle), "{word}");
        }
        for (cycle, word) in cycle_route {
            assert_eq!(ec_to_dumont_via_cycles(&c(cycle)).unwrap(), p(word), "{cycle}");
            assert_eq!(dumont_to_ec_via_cycles(&p(word)).unwrap(), c(cycle), "{word}");
        }
        assert_eq!(ec_to_dumont_via_histories(&c("(1,2)")).unwrap(), p("1"));
        assert_eq!(ec_to_dumont_via_cycles(&c("(1,2)")).unwrap(), p("1"));
    }
}
