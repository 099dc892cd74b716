//! Counting formulas: two independent routes to the Genocchi numbers, the
//! product and signed-sum formulas for permutations counted by descent-top
//! set, and pruned census helpers for cycle families over uniform contents.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::enumerate::{brute, CycleFamily, CycleIter};
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::perm::Permutation;

/// The start of the Genocchi sequence, used as a cross-check on anything
/// that claims to compute it.
const GENOCCHI_PREFIX: [u64; 8] = [1, 1, 3, 17, 155, 2073, 38227, 929569];

/// Signed square-product sum over unit-step sequences u_1 = 1 <= u_2 <= ...
/// <= u_n with steps of 0 or 1: the terms (-1)^(n - u_n) (u_1 ... u_n)^2
/// add up to the (n+1)-th Genocchi number.
pub fn genocchi_signed_sum(n: u32) -> BigInt {
    assert!(n >= 1, "the sum needs at least one term");
    fn walk(depth: u32, n: u32, u: u64, prod: &BigInt, acc: &mut BigInt) {
        if depth == n {
            if (n as u64).abs_diff(u) % 2 == 0 {
                *acc += prod;
            } else {
                *acc -= prod;
            }
            return;
        }
        for next in [u, u + 1] {
            walk(depth + 1, n, next, &(prod * (next * next)), acc);
        }
    }
    let mut acc = BigInt::zero();
    walk(1, n, 1, &BigInt::one(), &mut acc);
    acc
}

/// The n-th Genocchi number by the signed-sum route; the sequence starts
/// 1, 1, 3, 17, 155 from n = 1.
pub fn genocchi_number(n: u32) -> BigInt {
    assert!(n >= 1, "the sequence starts at n = 1");
    if n == 1 {
        BigInt::one()
    } else {
        genocchi_signed_sum(n - 1)
    }
}

/// Genocchi numbers g_1..g_max_n from the series x tan(x/2): the coefficient
/// of x^(2n) times (2n)! is g_n. All arithmetic is exact; a non-integer or
/// negative value, or disagreement with the reference prefix, is reported as
/// an internal error rather than returned.
pub fn genocchi_series_table(max_n: u32) -> Result<Vec<BigInt>> {
    let deg = (2 * max_n) as usize;
    // series of sin(x/2) and cos(x/2) up to x^deg
    let mut sin = vec![BigRational::zero(); deg + 1];
    let mut cos = vec![BigRational::zero(); deg + 1];
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut pow = BigRational::one(); // (1/2)^k / k!
    for k in 0..=deg {
        if k > 0 {
            pow = pow * &half / BigInt::from(k);
        }
        let signed = if (k / 2) % 2 == 0 { pow.clone() } else { -pow.clone() };
        if k % 2 == 1 {
            sin[k] = signed;
        } else {
            cos[k] = signed;
        }
    }
    // tan(x/2) by long division; cos(x/2) has constant term 1
    let mut tan = vec![BigRational::zero(); deg + 1];
    for k in 0..=deg {
        let mut acc = sin[k].clone();
        for j in 1..=k {
            acc -= &cos[j] * &tan[k - j];
        }
        tan[k] = acc;
    }
    let mut out = Vec::with_capacity(max_n as usize);
    let mut fact = BigInt::one();
    for k in 1..=deg {
        fact *= BigInt::from(k);
        if k % 2 == 1 {
            continue;
        }
        debug_assert!(tan[k].is_zero(), "tan(x/2) is odd");
        let n = k / 2;
        // x * tan(x/2) puts the tan coefficient of x^(k-1) at x^k
        let g = &tan[k - 1] * &fact;
        if !g.is_integer() {
            return Err(Error::Internal(format!("series gave a non-integer at g_{n}")));
        }
        let g = g.to_integer();
        if g.is_negative() {
            return Err(Error::Internal(format!("series gave a negative g_{n}")));
        }
        out.push(g);
    }
    for (i, &want) in GENOCCHI_PREFIX.iter().enumerate().take(out.len()) {
        if out[i] != BigInt::from(want) {
            return Err(Error::Internal(format!(
                "series gave g_{} = {}, reference says {want}",
                i + 1,
                out[i]
            )));
        }
    }
    Ok(out)
}

/// A descent-top counting problem: words on [n], candidate top set inside
/// 2..=n. Tops are held in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentSpec {
    n: u32,
    tops: Vec<u32>,
}

impl DescentSpec {
    pub fn new<I: IntoIterator<Item = u32>>(n: u32, tops: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("word length must be positive".into()));
        }
        let set: BTreeSet<u32> = tops.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&s| s < 2 || s > n) {
            return Err(Error::Domain(format!("descent top {bad} outside 2..={n}")));
        }
        Ok(DescentSpec {
            n,
            tops: set.into_iter().rev().collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The candidate tops, largest first.
    pub fn tops(&self) -> &[u32] {
        &self.tops
    }

    /// Differences between consecutive tops, the last measured down to 1.
    fn gaps(&self) -> Vec<u32> {
        (0..self.tops.len())
            .map(|i| self.tops[i] - self.tops.get(i + 1).copied().unwrap_or(1))
            .collect()
    }

    /// Words whose descent tops all lie in `chosen`, a subset of the
    /// candidate tops: the product over tops of (1 + how many chosen tops
    /// dominate it), each raised to the gap below it.
    pub fn count_within(&self, chosen: &BTreeSet<u32>) -> Result<BigInt> {
        if let Some(&bad) = chosen.iter().find(|t| !self.tops.contains(t)) {
            return Err(Error::Domain(format!("{bad} is not one of the candidate tops")));
        }
        let mut out = BigInt::one();
        for (&s, d) in self.tops.iter().zip(self.gaps()) {
            let u = 1 + chosen.iter().filter(|&&t| t >= s).count() as u64;
            out *= num::pow::pow(BigInt::from(u), d as usize);
        }
        Ok(out)
    }

    /// Words whose descent-top set is exactly the candidate set, by
    /// inclusion-exclusion over its subsets.
    pub fn count_exact_by_subsets(&self) -> BigInt {
        let k = self.tops.len();
        let mut total = BigInt::zero();
        for mask in 0u32..1 << k {
            let chosen: BTreeSet<u32> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.tops[i])
                .collect();
            let term = self.count_within(&chosen).expect("subsets of our own tops");
            if (k - chosen.len()) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    /// The same exact count as a signed sum over unit-step sequences
    /// 1 = u_0 <= u_1 <= ... <= u_k with steps of 0 or 1, each term
    /// (-1)^(k+1-u_k) times the product of u_i to the i-th gap.
    pub fn count_exact_by_unit_steps(&self) -> BigInt {
        let gaps = self.gaps();
        fn walk(i: usize, gaps: &[u32], u: u64, prod: &BigInt, acc: &mut BigInt) {
            if i == gaps.len() {
                if (gaps.len() as u64 + 1).abs_diff(u) % 2 == 0 {
                    *acc += prod;
                } else {
                    *acc -= prod;
                }
                return;
            }
            for next in [u, u + 1] {
                let f = num::pow::pow(BigInt::from(next), gaps[i] as usize);
                walk(i + 1, gaps, next, &(prod * f), acc);
            }
        }
        let mut acc = BigInt::zero();
        walk(0, &gaps, 1, &BigInt::one(), &mut acc);
        acc
    }
}

/// Maximum word length the descent-top census walks without the guard
/// lifted.
pub const MAX_CENSUS_LEN: u32 = 8;

/// Tallies every word of [n] by its descent-top set (keys ascending).
pub fn descent_top_census(n: u32, lift_guard: bool) -> Result<BTreeMap<Vec<u32>, u64>> {
    if !lift_guard && n > MAX_CENSUS_LEN {
        return Err(Error::Guard(format!(
            "word length {n} is over the census limit {MAX_CENSUS_LEN}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("word length must be positive".into()));
    }
    let mut word: Vec<u32> = (1..=n).collect();
    let mut out: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    loop {
        let p = Permutation::new(word.clone())?;
        let tops: Vec<u32> = p.descent_tops().into_iter().collect();
        *out.entry(tops).or_insert(0) += 1;
        if !brute::next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

/// Exact descent-top count read off the census instead of a formula.
pub fn count_exact_brute(spec: &DescentSpec, lift_guard: bool) -> Result<BigInt> {
    let census = descent_top_census(spec.n(), lift_guard)?;
    let key: Vec<u32> = spec.tops().iter().rev().copied().collect();
    Ok(BigInt::from(census.get(&key).copied().unwrap_or(0)))
}

/// Within-subset descent-top count read off the census.
pub fn count_within_brute(
    spec: &DescentSpec,
    chosen: &BTreeSet<u32>,
    lift_guard: bool,
) -> Result<BigInt> {
    if let Some(&bad) = chosen.iter().find(|t| !spec.tops().contains(t)) {
        return Err(Error::Domain(format!("{bad} is not one of the candidate tops")));
    }
    let census = descent_top_census(spec.n(), lift_guard)?;
    let total: u64 = census
        .iter()
        .filter(|(tops, _)| tops.iter().all(|v| chosen.contains(v)))
        .map(|(_, count)| count)
        .sum();
    Ok(BigInt::from(total))
}

/// Largest uniform content size (2nk letters) enumerated without the guard
/// lifted; (n, k) = (3, 3) sits right at it.
pub const MAX_UNIFORM_SIZE: u32 = 18;

/// The content {1^k, 2^k, ..., (2n)^k}.
pub fn uniform_content(n: u32, k: u32) -> Result<Multiset> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    Multiset::uniform(2 * n, k)
}

/// Size of a cycle family over {1^k, ..., (2n)^k} by pruned enumeration.
pub fn uniform_cycle_count(family: CycleFamily, n: u32, k: u32, lift_guard: bool) -> Result<u64> {
    let content = uniform_content(n, k)?;
    if !lift_guard && content.size() as u32 > MAX_UNIFORM_SIZE {
        return Err(Error::Guard(format!(
            "content size {} is over the enumeration limit {MAX_UNIFORM_SIZE}",
            content.size()
        )));
    }
    Ok(CycleIter::new(family, &content)?.count() as u64)
}
