//! Cross-module regression anchors: values measured once with an
//! independent brute-force pass and frozen here.

use std::collections::BTreeSet;

use genocchi_cycles::counting::{self, DescentSpec};
use genocchi_cycles::enumerate::{brute, CycleFamily, CycleIter};
use genocchi_cycles::{bijection, Cycle, Multiset};

#[test]
fn repeated_content_census() {
    let content: Multiset = "1^2,2^2,3^2,4^2".parse().unwrap();
    let ec: Vec<Cycle> = CycleIter::new(CycleFamily::EvenOddDrop, &content)
        .unwrap()
        .collect();
    let dc: Vec<Cycle> = CycleIter::new(CycleFamily::DCycle, &content)
        .unwrap()
        .collect();
    assert_eq!(ec.len(), 14);
    assert_eq!(dc.len(), 14);
    let filtered = brute::cycle_set(CycleFamily::EvenOddDrop, &content, false).unwrap();
    assert_eq!(filtered.len(), 14);
    assert!(ec.contains(&"(1,2,1,2,4,3,3,4)".parse().unwrap()));
    assert!(dc.contains(&"(1,2,1,4,3,3,4,2)".parse().unwrap()));
    // the surgery carries one census onto the other
    let images: BTreeSet<Cycle> = ec.iter().map(|c| bijection::ec_to_dc(c).unwrap()).collect();
    assert_eq!(images, dc.into_iter().collect());
}

#[test]
fn uniform_content_table() {
    let expect = [[1u64, 2, 4], [1, 14, 334], [3, 744, 427002]];
    for (n, row) in expect.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            let n = n as u32 + 1;
            let k = k as u32 + 1;
            let ec = counting::uniform_cycle_count(CycleFamily::EvenOddDrop, n, k, false).unwrap();
            let dc = counting::uniform_cycle_count(CycleFamily::DCycle, n, k, false).unwrap();
            assert_eq!(ec, want, "drop cycles at ({n}, {k})");
            assert_eq!(dc, want, "d-cycles at ({n}, {k})");
        }
    }
}

#[test]
fn composite_routes_differ() {
    // both routes are bijections onto the Dumont words, yet they pair inputs
    // differently; the agreement counts are frozen as regression anchors
    for (m, want_agree) in [(6u32, 0usize), (8, 2)] {
        let content = Multiset::one_to(m).unwrap();
        let mut agree = 0;
        let mut seen = 0;
        for c in CycleIter::new(CycleFamily::EvenOddDrop, &content).unwrap() {
            let w1 = bijection::ec_to_dumont_via_histories(&c).unwrap();
            let w2 = bijection::ec_to_dumont_via_cycles(&c).unwrap();
            if w1 == w2 {
                agree += 1;
            }
            seen += 1;
        }
        assert_eq!(agree, want_agree, "[{m}]");
        assert!(seen > 0);
    }
}

#[test]
fn worked_descent_sets() {
    let alternating = DescentSpec::new(7, [2, 4, 6]).unwrap();
    assert_eq!(alternating.count_exact_by_subsets().to_string(), "17");
    assert_eq!(alternating.count_exact_by_unit_steps().to_string(), "17");
    assert_eq!(
        counting::count_exact_brute(&alternating, false).unwrap().to_string(),
        "17"
    );
    let next = DescentSpec::new(9, [2, 4, 6, 8]).unwrap();
    assert_eq!(next.count_exact_by_unit_steps().to_string(), "155");
}

#[test]
fn genocchi_tail() {
    let table = counting::genocchi_series_table(12).unwrap();
    assert_eq!(table[10].to_string(), "51943281731");
    assert_eq!(table[11].to_string(), "2905151042481");
    for n in 1..=12u32 {
        assert_eq!(table[n as usize - 1], counting::genocchi_number(n), "g_{n}");
    }
}
