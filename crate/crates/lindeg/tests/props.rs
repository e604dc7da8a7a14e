use lindeg::core::*;
use lindeg::homalg::*;
use proptest::prelude::*;

/// Random interval multiplicity list for a random quiver length.
fn iso_strategy(max_n: usize) -> impl Strategy<Value = IsoClass> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let intervals: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i..=n).map(move |j| (i, j)))
                .collect();
            let len = intervals.len();
            (Just(n), Just(intervals), proptest::collection::vec(0usize..3, len))
        })
        .prop_map(|(n, intervals, mults)| {
            let mut iso = IsoClass::zero(n);
            for (&(i, j), &m) in intervals.iter().zip(&mults) {
                iso.add(i, j, m);
            }
            iso
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hom_minus_ext_is_euler_form(a in iso_strategy(5), b in iso_strategy(5)) {
        prop_assume!(a.n == b.n);
        let da = a.dim_vector();
        let db = b.dim_vector();
        let euler = euler_form(&da, &db).unwrap();
        prop_assert_eq!(
            hom_dim(&a, &b) as i64 - ext_dim(&a, &b) as i64,
            euler
        );
    }

    #[test]
    fn rank_iso_round_trip(iso in iso_strategy(5)) {
        let r = ranks_from_iso(&iso);
        r.validate().unwrap();
        let back = iso_from_ranks(&r).unwrap();
        prop_assert_eq!(back, iso);
    }

    #[test]
    fn json_rank_tuple_round_trip(iso in iso_strategy(4)) {
        let r = ranks_from_iso(&iso);
        let v = json::rank_tuple_to_json(&r);
        let back = json::rank_tuple_from_json(&v).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn json_iso_round_trip(iso in iso_strategy(4)) {
        let v = json::iso_to_json(&iso);
        let back = json::iso_from_json(&v).unwrap();
        prop_assert_eq!(back, iso);
    }

    #[test]
    fn degeneration_is_reflexive_and_canonical_rep_realizes(iso in iso_strategy(4)) {
        let r = ranks_from_iso(&iso);
        prop_assert!(r.dominates(&r).unwrap());
        let rep = canonical_rep(&iso);
        prop_assert_eq!(rank_tuple(&rep).unwrap(), r);
    }

    #[test]
    fn embeds_is_reflexive_and_respects_sums(a in iso_strategy(4), b in iso_strategy(4)) {
        prop_assert!(embeds(&a, &a).unwrap());
        prop_assume!(a.n == b.n);
        let sum = a.direct_sum(&b);
        prop_assert!(embeds(&a, &sum).unwrap());
        prop_assert!(embeds(&b, &sum).unwrap());
    }
}
