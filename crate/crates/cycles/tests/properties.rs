//! Randomized invariants over the object types and the maps between them.

use proptest::prelude::*;

use genocchi_cycles::{bijection, Cycle, LaguerreHistory, Multiset, Permutation};

fn small_values() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..=6, 1..=10)
}

fn permutation_word() -> impl Strategy<Value = Vec<u32>> {
    (1u32..=9).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

fn surgery_values() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..=9, 2..=7).prop_filter(
        "needs an odd minimum and an even maximum",
        |vals| {
            let min = vals.iter().min().unwrap();
            let max = vals.iter().max().unwrap();
            min % 2 == 1 && max % 2 == 0
        },
    )
}

proptest! {
    #[test]
    fn canonical_form_ignores_rotation(vals in small_values(), shift in 0usize..10) {
        let c = Cycle::new(vals.clone()).unwrap();
        let mut rotated = vals;
        let k = shift % rotated.len();
        rotated.rotate_left(k);
        prop_assert_eq!(Cycle::new(rotated).unwrap(), c.clone());
        prop_assert_eq!(Cycle::new(c.seq().to_vec()).unwrap(), c);
    }

    #[test]
    fn cycle_literals_round_trip(vals in small_values()) {
        let c = Cycle::new(vals).unwrap();
        prop_assert_eq!(c.to_string().parse::<Cycle>().unwrap(), c.clone());
        prop_assert_eq!(c.compact().to_string().parse::<Cycle>().unwrap(), c.clone());
        prop_assert_eq!(c.compact().expand(), c);
    }

    #[test]
    fn multiset_literals_round_trip(vals in small_values()) {
        let m = Multiset::from_values(vals).unwrap();
        prop_assert_eq!(m.to_string().parse::<Multiset>().unwrap(), m.clone());
        prop_assert_eq!(Multiset::from_values(m.expanded()).unwrap(), m);
    }

    #[test]
    fn history_encoding_round_trips(word in permutation_word()) {
        let p = Permutation::new(word).unwrap();
        let h = bijection::perm_to_history(&p).unwrap();
        prop_assert_eq!(bijection::history_to_perm(&h).unwrap(), p.clone());
        let reparsed: LaguerreHistory = h.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, h);
        if p.len() <= 9 {
            let compactly: Permutation = p.to_string().parse().unwrap();
            prop_assert_eq!(compactly, p);
        }
    }

    #[test]
    fn surgery_round_trips_on_sampled_contents(vals in surgery_values()) {
        let content = Multiset::from_values(vals).unwrap();
        let cycles: Vec<Cycle> = genocchi_cycles::enumerate::CycleIter::new(
            genocchi_cycles::enumerate::CycleFamily::EvenOddDrop,
            &content,
        )
        .unwrap()
        .take(25)
        .collect();
        for c in cycles {
            let d = bijection::ec_to_dc(&c).unwrap();
            prop_assert!(d.is_d_cycle());
            prop_assert_eq!(d.multiset(), c.multiset());
            prop_assert_eq!(bijection::dc_to_ec(&d).unwrap(), c);
        }
    }
}
