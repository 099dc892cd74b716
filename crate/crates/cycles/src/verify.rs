//! Self-check suites behind the command-line `verify` subcommand: round
//! trips for every map, counting agreement across representations, formula
//! cross-checks, and randomized stress tests of the bundle surgery. Each
//! check yields a [`CheckReport`] instead of panicking so a runner can print
//! one line per check and exit nonzero on the first failure.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::bijection;
use crate::counting::{self, DescentSpec};
use crate::cycle::Cycle;
use crate::enumerate::{CycleFamily, CycleIter, HistoryFamily, HistoryIter, PermFamily, PermIter};
use crate::error::Result;
use crate::multiset::Multiset;
use crate::perm::Permutation;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

fn run_check(name: &str, body: impl FnOnce() -> Result<(bool, String)>) -> CheckReport {
    match body() {
        Ok((passed, detail)) => CheckReport {
            name: name.into(),
            passed,
            detail,
        },
        Err(e) => CheckReport {
            name: name.into(),
            passed: false,
            detail: format!("errored: {e}"),
        },
    }
}

/// Round trips and codomain checks for every map, exhaustively over the set
/// contents [2], [4], ..., [2 max_n], plus randomized history round trips on
/// larger words and a comparison of the two composite routes.
pub fn roundtrip_suite(max_n: u32) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(run_check(
            &format!("maps round-trip over the set content [{}]", 2 * n),
            || stage_roundtrips(n),
        ));
    }
    out.push(run_check("random words survive the history round trip", || {
        random_history_roundtrips()
    }));
    out.push(run_check("the two composite routes compared", composite_comparison));
    out
}

fn stage_roundtrips(n: u32) -> Result<(bool, String)> {
    let m = 2 * n;
    let content = Multiset::one_to(m)?;
    let ec: Vec<Cycle> = CycleIter::new(CycleFamily::EvenOddDrop, &content)?.collect();
    let dc: Vec<Cycle> = CycleIter::new(CycleFamily::DCycle, &content)?.collect();
    let dumont: BTreeSet<Permutation> = PermIter::new(PermFamily::Dumont, m - 1)?.collect();
    let soe: BTreeSet<Permutation> = PermIter::new(PermFamily::OddEvenDescent, m - 1)?.collect();

    let mut via_histories = BTreeSet::new();
    let mut via_cycles = BTreeSet::new();
    let mut surgery_images = BTreeSet::new();
    for c in &ec {
        let word = bijection::cycle_to_soe(c)?;
        if !soe.contains(&word) || bijection::soe_to_cycle(&word)? != *c {
            return Ok((false, format!("the shift fails on {c}")));
        }
        let hist = bijection::perm_to_history(&word)?;
        if !hist.is_soe_shaped()? || bijection::history_to_perm(&hist)? != word {
            return Ok((false, format!("the encoding fails on {word}")));
        }
        let reshaped = bijection::reshape_to_dumont(&hist)?;
        if !reshaped.is_dumont_shaped()? || bijection::reshape_to_soe(&reshaped)? != hist {
            return Ok((false, format!("the reshaping fails on {hist}")));
        }
        let d = bijection::ec_to_dc(c)?;
        if !d.is_d_cycle() || d.multiset() != c.multiset() || bijection::dc_to_ec(&d)? != *c {
            return Ok((false, format!("the surgery fails on {c}")));
        }
        surgery_images.insert(d.clone());
        let w1 = bijection::ec_to_dumont_via_histories(c)?;
        if !dumont.contains(&w1) || bijection::dumont_to_ec_via_histories(&w1)? != *c {
            return Ok((false, format!("the history route fails on {c}")));
        }
        via_histories.insert(w1);
        let w2 = bijection::dc_to_dumont(&d)?;
        if !dumont.contains(&w2)
            || bijection::dumont_to_dc(&w2)? != d
            || bijection::dumont_to_ec_via_cycles(&w2)? != *c
        {
            return Ok((false, format!("the cycle route fails on {c}")));
        }
        via_cycles.insert(w2);
    }
    let dc_set: BTreeSet<Cycle> = dc.iter().cloned().collect();
    if surgery_images != dc_set {
        return Ok((false, "the surgery does not land onto the d-cycles".into()));
    }
    if via_histories != dumont || via_cycles != dumont {
        return Ok((false, "a composite route is not onto the Dumont words".into()));
    }
    // the encoding restricted to each word family lands in its shape class
    let m_shaped: BTreeSet<_> = HistoryIter::new(HistoryFamily::SoeShaped, m - 2)?.collect();
    let mstar_shaped: BTreeSet<_> = HistoryIter::new(HistoryFamily::DumontShaped, m - 2)?.collect();
    let soe_images: BTreeSet<_> = soe
        .iter()
        .map(bijection::perm_to_history)
        .collect::<Result<_>>()?;
    let dumont_images: BTreeSet<_> = dumont
        .iter()
        .map(bijection::perm_to_history)
        .collect::<Result<_>>()?;
    if soe_images != m_shaped || dumont_images != mstar_shaped {
        return Ok((false, "the encoding misses a shape class".into()));
    }
    Ok((
        true,
        format!("{} cycles checked through every stage", ec.len()),
    ))
}

fn random_history_roundtrips() -> Result<(bool, String)> {
    const SAMPLES: u32 = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..SAMPLES {
        let n = rng.gen_range(9..=13);
        let mut word: Vec<u32> = (1..=n).collect();
        word.shuffle(&mut rng);
        let p = Permutation::new(word)?;
        let hist = bijection::perm_to_history(&p)?;
        if bijection::history_to_perm(&hist)? != p {
            return Ok((false, format!("round trip {i} fails on {p}")));
        }
    }
    Ok((true, format!("{SAMPLES} random words of lengths 9 to 13")))
}

fn composite_comparison() -> Result<(bool, String)> {
    // the two routes are separate bijections; report how often they pair an
    // input with the same word
    let mut parts = Vec::new();
    for n in [3u32, 4] {
        let content = Multiset::one_to(2 * n)?;
        let mut agree = 0usize;
        let mut total = 0usize;
        for c in CycleIter::new(CycleFamily::EvenOddDrop, &content)? {
            total += 1;
            if bijection::ec_to_dumont_via_histories(&c)? == bijection::ec_to_dumont_via_cycles(&c)?
            {
                agree += 1;
            }
        }
        parts.push(format!("[{}]: {agree} of {total}", 2 * n));
    }
    Ok((
        true,
        format!("the routes pair identically on {}", parts.join(", ")),
    ))
}

/// Counting agreement: family sizes against the Genocchi numbers, history
/// classes against word classes, factorial growth of unrestricted histories,
/// and pruned generators against their brute-force counterparts.
pub fn counts_suite(max_n: u32) -> Vec<CheckReport> {
    vec![
        run_check("family sizes follow the Genocchi sequence", || genocchi_counts(max_n)),
        run_check("history classes count like word classes", || history_counts(max_n)),
        run_check("unrestricted histories count factorially", || factorial_counts(max_n)),
        run_check("pruned generators agree with brute force", || brute_agreement(max_n)),
    ]
}

fn genocchi_counts(max_n: u32) -> Result<(bool, String)> {
    for n in 1..=max_n {
        let g = counting::genocchi_number(n);
        let content = Multiset::one_to(2 * n)?;
        let counts = [
            CycleIter::new(CycleFamily::EvenOddDrop, &content)?.count(),
            CycleIter::new(CycleFamily::DCycle, &content)?.count(),
            PermIter::new(PermFamily::Dumont, 2 * n - 1)?.count(),
            PermIter::new(PermFamily::OddEvenDescent, 2 * n - 1)?.count(),
        ];
        for (what, count) in ["drop cycles", "d-cycles", "Dumont words", "soe words"]
            .iter()
            .zip(counts)
        {
            if BigInt::from(count) != g {
                return Ok((false, format!("{what} at n = {n}: {count}, expected {g}")));
            }
        }
    }
    Ok((true, format!("four families match g_n for n up to {max_n}")))
}

fn history_counts(max_n: u32) -> Result<(bool, String)> {
    for n in 1..=max_n {
        let soe_shaped = HistoryIter::new(HistoryFamily::SoeShaped, 2 * n - 2)?.count();
        let dumont_shaped = HistoryIter::new(HistoryFamily::DumontShaped, 2 * n - 2)?.count();
        let soe = PermIter::new(PermFamily::OddEvenDescent, 2 * n - 1)?.count();
        let dumont = PermIter::new(PermFamily::Dumont, 2 * n - 1)?.count();
        if soe_shaped != soe || dumont_shaped != dumont {
            return Ok((
                false,
                format!(
                    "lengths 2n-2 = {}: shaped {soe_shaped}/{dumont_shaped}, words {soe}/{dumont}",
                    2 * n - 2
                ),
            ));
        }
    }
    Ok((true, format!("both shape classes for n up to {max_n}")))
}

fn factorial_counts(max_n: u32) -> Result<(bool, String)> {
    let cap = (2 * max_n - 2).min(7);
    for n in 0..=cap {
        let count = HistoryIter::new(HistoryFamily::All, n)?.count() as u64;
        let factorial: u64 = (1..=u64::from(n) + 1).product();
        if count != factorial {
            return Ok((false, format!("length {n}: {count}, expected {factorial}")));
        }
    }
    Ok((true, format!("(n+1)! confirmed for lengths up to {cap}")))
}

fn brute_agreement(max_n: u32) -> Result<(bool, String)> {
    use crate::enumerate::brute;
    let mut cycles = 0usize;
    for n in 1..=max_n.min(4) {
        for k in 1..=2u32 {
            if 2 * n * k > 8 {
                continue;
            }
            let content = Multiset::uniform(2 * n, k)?;
            for family in [CycleFamily::EvenOddDrop, CycleFamily::DCycle] {
                let streamed: Vec<Cycle> = CycleIter::new(family, &content)?.collect();
                let filtered: Vec<Cycle> =
                    brute::cycle_set(family, &content, false)?.into_iter().collect();
                if streamed != filtered {
                    return Ok((false, format!("cycles differ on {content}")));
                }
                cycles += streamed.len();
            }
        }
    }
    for n in (1..=(2 * max_n - 1).min(7)).step_by(2) {
        for family in [PermFamily::Dumont, PermFamily::OddEvenDescent] {
            let streamed: Vec<Permutation> = PermIter::new(family, n)?.collect();
            let filtered: Vec<Permutation> = brute::perm_set(family, n, false)?.into_iter().collect();
            if streamed != filtered {
                return Ok((false, format!("words differ at length {n}")));
            }
        }
    }
    for n in 0..=(2 * max_n - 2).min(6) {
        let families: &[HistoryFamily] = if n % 2 == 0 {
            &[HistoryFamily::All, HistoryFamily::SoeShaped, HistoryFamily::DumontShaped]
        } else {
            &[HistoryFamily::All]
        };
        for &family in families {
            let streamed: Vec<_> = HistoryIter::new(family, n)?.collect();
            let filtered: Vec<_> = brute::history_set(family, n, false)?.into_iter().collect();
            if streamed != filtered {
                return Ok((false, format!("histories differ at length {n}")));
            }
        }
    }
    Ok((true, format!("streams match filters ({cycles} cycles among them)")))
}

/// Formula cross-checks: the two Genocchi routes, the three descent-top
/// counts, the n! partition identity, and the alternating-top identity.
pub fn formulas_suite(max_n: u32) -> Vec<CheckReport> {
    vec![
        run_check("the two Genocchi routes agree", || genocchi_routes(max_n)),
        run_check("the two exact descent-top formulas agree", || {
            descent_formulas(max_n.min(8))
        }),
        run_check("descent-top formulas agree with the census", || {
            descent_census(max_n.min(7))
        }),
        run_check("exact counts partition the words", || descent_partition(max_n.min(8))),
        run_check("alternating tops give Genocchi numbers", || alternating_tops(max_n)),
    ]
}

fn genocchi_routes(max_n: u32) -> Result<(bool, String)> {
    let table = counting::genocchi_series_table(max_n)?;
    for n in 1..=max_n {
        let direct = counting::genocchi_number(n);
        if table[n as usize - 1] != direct {
            return Ok((
                false,
                format!("g_{n}: series {} vs sum {direct}", table[n as usize - 1]),
            ));
        }
    }
    Ok((true, format!("series and signed sum agree up to g_{max_n}")))
}

fn descent_specs(n: u32) -> Vec<DescentSpec> {
    let candidates: Vec<u32> = (2..=n).collect();
    (0u32..1 << candidates.len())
        .map(|mask| {
            let tops = (0..candidates.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i]);
            DescentSpec::new(n, tops).expect("in range")
        })
        .collect()
}

fn descent_formulas(cap: u32) -> Result<(bool, String)> {
    let mut specs = 0usize;
    for n in 1..=cap {
        for spec in descent_specs(n) {
            if spec.count_exact_by_subsets() != spec.count_exact_by_unit_steps() {
                return Ok((false, format!("n = {n}, tops {:?}", spec.tops())));
            }
            specs += 1;
        }
    }
    Ok((true, format!("{specs} top sets checked up to length {cap}")))
}

fn descent_census(cap: u32) -> Result<(bool, String)> {
    for n in 1..=cap {
        let census = counting::descent_top_census(n, false)?;
        for spec in descent_specs(n) {
            let key: Vec<u32> = spec.tops().iter().rev().copied().collect();
            let exact = BigInt::from(census.get(&key).copied().unwrap_or(0));
            if spec.count_exact_by_subsets() != exact {
                return Ok((false, format!("exact count differs at n = {n}, tops {key:?}")));
            }
            let chosen: BTreeSet<u32> = key.iter().copied().collect();
            let within: u64 = census
                .iter()
                .filter(|(tops, _)| tops.iter().all(|v| chosen.contains(v)))
                .map(|(_, count)| count)
                .sum();
            if spec.count_within(&chosen)? != BigInt::from(within) {
                return Ok((false, format!("within count differs at n = {n}, tops {key:?}")));
            }
        }
    }
    Ok((true, format!("formulas match the census up to length {cap}")))
}

fn descent_partition(cap: u32) -> Result<(bool, String)> {
    for n in 1..=cap {
        let mut total = BigInt::zero();
        for spec in descent_specs(n) {
            total += spec.count_exact_by_subsets();
        }
        let factorial = (1..=u64::from(n)).product::<u64>();
        if total != BigInt::from(factorial) {
            return Ok((false, format!("length {n} sums to {total}, not {factorial}")));
        }
    }
    Ok((true, format!("exact counts sum to n! up to length {cap}")))
}

fn alternating_tops(max_n: u32) -> Result<(bool, String)> {
    let cap = ((max_n + 1) / 2).clamp(1, 5);
    for k in 1..=cap {
        let spec = DescentSpec::new(2 * k + 1, (1..=k).map(|i| 2 * i))?;
        let got = spec.count_exact_by_unit_steps();
        let want = counting::genocchi_number(k + 1);
        if got != want {
            return Ok((false, format!("tops 2,4,..,{}: {got}, expected {want}", 2 * k)));
        }
    }
    Ok((
        true,
        format!("tops {{2, 4, .., 2k}} give g_(k+1) for k up to {cap}"),
    ))
}

/// Randomized stress test of the bundle surgery over multiset contents:
/// bijectivity between the two families, round trips, content preservation,
/// the moved-bundle bookkeeping, and independence from processing order.
pub fn psi_order_suite(max_size: usize, samples: u32, seed: u64) -> Vec<CheckReport> {
    vec![run_check("bundle surgery on random contents", || {
        surgery_random(max_size, samples, seed)
    })]
}

fn permutations_of(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for shorter in permutations_of(k - 1) {
        for at in 0..=shorter.len() {
            let mut longer = shorter.clone();
            longer.insert(at, k - 1);
            out.push(longer);
        }
    }
    out
}

fn bundle_census(c: &Cycle, descents: bool) -> Vec<(u32, u32)> {
    let compact = c.compact();
    let picked = if descents {
        compact.even_double_descents()
    } else {
        compact.even_double_ascents()
    };
    let mut out: Vec<(u32, u32)> = picked
        .iter()
        .map(|&i| (compact.bundles()[i].value, compact.bundles()[i].mult))
        .collect();
    out.sort_unstable();
    out
}

fn surgery_random(max_size: usize, samples: u32, seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested = 0u32;
    let mut order_cases = 0u64;
    while tested < samples {
        let size = rng.gen_range(2..=max_size.max(2));
        let values: Vec<u32> = (0..size).map(|_| rng.gen_range(1..=9)).collect();
        let content = Multiset::from_values(values)?;
        // contents with even least or odd greatest value carry no cycles
        match (content.min_value(), content.max_value()) {
            (Some(lo), Some(hi)) if lo % 2 == 1 && hi % 2 == 0 => {}
            _ => continue,
        }
        tested += 1;
        let ec: Vec<Cycle> = CycleIter::new(CycleFamily::EvenOddDrop, &content)?.collect();
        let dc: BTreeSet<Cycle> = CycleIter::new(CycleFamily::DCycle, &content)?.collect();
        let mut images = BTreeSet::new();
        for c in &ec {
            let d = bijection::ec_to_dc(c)?;
            if !d.is_d_cycle() || d.multiset() != c.multiset() {
                return Ok((false, format!("surgery leaves its codomain on {c}")));
            }
            if bijection::dc_to_ec(&d)? != *c {
                return Ok((false, format!("surgery does not invert on {c}")));
            }
            if bundle_census(c, false) != bundle_census(&d, true) {
                return Ok((false, format!("moved bundles differ on {c}")));
            }
            let movable = c.compact().even_double_ascents().len();
            if movable <= 4 {
                for order in permutations_of(movable) {
                    if bijection::ec_to_dc_ordered(c, &order)? != d {
                        return Ok((false, format!("order {order:?} changes the result on {c}")));
                    }
                    order_cases += 1;
                }
            }
            images.insert(d);
        }
        if images.len() != ec.len() || images != dc {
            return Ok((
                false,
                format!("surgery is not a bijection on the content {content}"),
            ));
        }
        for d in &dc {
            let back = bijection::dc_to_ec(d)?;
            if bijection::ec_to_dc(&back)? != *d {
                return Ok((false, format!("inverse surgery does not invert on {d}")));
            }
        }
    }
    Ok((
        true,
        format!("{tested} random contents of size up to {max_size}; {order_cases} processing orders"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_sizes() {
        for report in roundtrip_suite(2)
            .into_iter()
            .chain(counts_suite(2))
            .chain(formulas_suite(4))
            .chain(psi_order_suite(5, 20, 7))
        {
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn reports_render_one_line() {
        let report = CheckReport {
            name: "demo".into(),
            passed: false,
            detail: "broken".into(),
        };
        assert_eq!(report.to_string(), "FAIL demo: broken");
        assert!(!all_passed(&[report]));
    }

    #[test]
    fn order_permutations_are_complete() {
        assert_eq!(permutations_of(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations_of(3).len(), 6);
        let distinct: BTreeSet<Vec<usize>> = permutations_of(4).into_iter().collect();
        assert_eq!(distinct.len(), 24);
    }
}
