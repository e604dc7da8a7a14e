use lindeg::core::*;

#[test]
fn named_rank_formulas() {
    for n in 2..=8 {
        let m0 = ranks_from_iso(&named_rep(&NamedRep::M0, n).unwrap());
        let m1 = ranks_from_iso(&named_rep(&NamedRep::M1, n).unwrap());
        let m2 = ranks_from_iso(&named_rep(&NamedRep::M2, n).unwrap());
        assert_eq!(m0, r0(n));
        assert_eq!(m1, r1(n));
        assert_eq!(m2, r2(n));
        for i in 1..n {
            let rai = ranks_from_iso(&named_rep(&NamedRep::Ai(i), n).unwrap());
            for j in 1..n {
                for k in j + 1..=n {
                    let expect = if j <= i && i < k { n - 1 } else { n + 1 };
                    assert_eq!(rai.get(j, k), expect, "n={} i={} ({},{})", n, i, j, k);
                }
            }
        }
    }
}

#[test]
fn m1_is_a_plus_astar() {
    for n in 2..=6 {
        let m1 = named_rep(&NamedRep::M1, n).unwrap();
        let mut sum = IsoClass::zero(n);
        for i in 1..=n {
            sum.add(i, n, 1); // P_i
            sum.add(1, i, 1); // I_i
        }
        assert_eq!(m1, sum);
    }
}

#[test]
fn m2_decomposition() {
    // M2 = ⊕ P_i ⊕ ⊕_{j<n} I_j ⊕ ⊕ S_k
    for n in 2..=6 {
        let m2 = named_rep(&NamedRep::M2, n).unwrap();
        let mut sum = IsoClass::zero(n);
        for i in 1..=n {
            sum.add(i, n, 1);
        }
        for j in 1..n {
            sum.add(1, j, 1);
        }
        for k in 1..=n {
            sum.add(k, k, 1);
        }
        assert_eq!(m2, sum);
    }
}

#[test]
fn iso_rank_round_trip() {
    for n in 2..=6 {
        for kind in [
            NamedRep::M0,
            NamedRep::M1,
            NamedRep::M2,
            NamedRep::Ai(1),
            NamedRep::Aij(1, n - 1),
            NamedRep::Mi(vec![1]),
        ] {
            let iso = named_rep(&kind, n).unwrap();
            let rt = ranks_from_iso(&iso);
            assert_eq!(iso_from_ranks(&rt).unwrap(), iso);
            assert_eq!(rt.diag, vec![n + 1; n], "{:?}", kind);
        }
    }
}

#[test]
fn canonical_rep_realizes_ranks() {
    for n in 2..=5 {
        for kind in [NamedRep::M0, NamedRep::M1, NamedRep::M2, NamedRep::Ai(1)] {
            let iso = named_rep(&kind, n).unwrap();
            let rep = canonical_rep(&iso);
            assert_eq!(rank_tuple(&rep).unwrap(), ranks_from_iso(&iso));
        }
    }
    // and over a small prime field
    let iso = named_rep(&NamedRep::M2, 4).unwrap();
    let rep = canonical_rep_fp(&iso, 2);
    assert_eq!(rank_tuple(&rep).unwrap(), ranks_from_iso(&iso));
}

#[test]
fn non_realizable_ranks_rejected() {
    // n=2, d=(3,3), r_{1,2}=3 is fine; bump a fake: diag (2,2) with r=3
    let rt = RankTuple::new(vec![2, 2], vec![vec![3]]).unwrap();
    assert!(iso_from_ranks(&rt).is_err());
    // monotonicity violation: r_{1,2} < r_{1,3} for n=3
    let rt = RankTuple::new(vec![4, 4, 4], vec![vec![1, 2], vec![3]]).unwrap();
    assert!(rt.validate().is_err());
}

#[test]
fn mi_dimension_vector() {
    // P_1^{n+1-k} ⊕ ⊕ (I_{i_m} ⊕ P_{i_m+1}) always has vertex dims n+1
    for n in 2..=6 {
        for i in 1..n {
            let iso = named_rep(&NamedRep::Mi(vec![i]), n).unwrap();
            assert_eq!(iso.dim_vector().d, vec![n + 1; n]);
        }
    }
    let iso = named_rep(&NamedRep::Mi(vec![1, 3]), 4).unwrap();
    assert_eq!(iso.dim_vector().d, vec![5; 4]);
}

#[test]
fn json_round_trips() {
    use lindeg::core::json::*;
    let iso = named_rep(&NamedRep::M2, 4).unwrap();
    let v = iso_to_json(&iso);
    assert_eq!(iso_from_json(&v).unwrap(), iso);

    let rt = ranks_from_iso(&iso);
    let v = rank_tuple_to_json(&rt);
    assert_eq!(rank_tuple_from_json(&v).unwrap(), rt);

    let rep = canonical_rep(&iso);
    let v = matrix_rep_to_json(&rep);
    match matrix_rep_from_json(&v).unwrap() {
        AnyRep::Q(r2) => {
            assert_eq!(r2.dims, rep.dims);
            assert_eq!(
                lindeg::core::rank_tuple(&r2).unwrap(),
                lindeg::core::rank_tuple(&rep).unwrap()
            );
        }
        _ => panic!("expected rational rep"),
    }
}

#[test]
fn segment_order_is_by_degree() {
    // higher right endpoint first (larger co-degree), kernels last
    let iso = named_rep(&NamedRep::M2, 4).unwrap();
    let order = segment_order(&iso);
    assert_eq!(
        order,
        vec![
            (4, 4),
            (4, 4),
            (3, 4),
            (2, 4),
            (1, 4),
            (3, 3),
            (1, 3),
            (2, 2),
            (1, 2),
            (1, 1),
            (1, 1)
        ]
    );
}
