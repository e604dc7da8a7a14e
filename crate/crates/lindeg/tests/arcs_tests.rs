use lindeg::arcs::*;
use lindeg::core::*;

fn catalan(n: usize) -> usize {
    // independent oracle: C_0 = 1, C_{n+1} = Σ C_i C_{n-i}
    let mut c = vec![1usize];
    for m in 1..=n {
        let v = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
        c.push(v);
    }
    c[n]
}

#[test]
fn arc_counts_are_catalan() {
    for n in 1..=10 {
        assert_eq!(enumerate_arcs(n).len(), catalan(n), "n={}", n);
    }
}

#[test]
fn non_crossing_validation() {
    assert!(ArcDiagram::new(4, vec![(1, 3), (2, 4)]).is_err()); // proper crossing
    assert!(ArcDiagram::new(4, vec![(1, 3), (1, 4)]).is_err()); // shared left point
    assert!(ArcDiagram::new(4, vec![(1, 4), (3, 4)]).is_err()); // shared right point
    assert!(ArcDiagram::new(4, vec![(1, 4), (2, 3)]).is_ok()); // nesting is fine
    assert!(ArcDiagram::new(4, vec![(1, 2), (2, 3)]).is_ok()); // chains are fine
    assert!(ArcDiagram::new(2, vec![(2, 2)]).is_err());
}

#[test]
fn rank_of_arcs_examples() {
    let empty = ArcDiagram::new(3, vec![]).unwrap();
    let r = rank_of_arcs(&empty);
    for i in 1..=3 {
        for j in i..=3 {
            assert_eq!(r.get(i, j), i);
        }
    }
    let a = ArcDiagram::new(2, vec![(1, 2)]).unwrap();
    assert_eq!(rank_of_arcs(&a).get(1, 2), 0);
}

#[test]
fn rank_of_arcs_is_rank_of_n() {
    for n in 1..=6 {
        for a in enumerate_arcs(n) {
            let na = n_of_arcs(&a).unwrap();
            assert_eq!(ranks_from_iso(&na), rank_of_arcs(&a), "A={:?}", a.arcs);
        }
    }
}

#[test]
fn n_and_q_examples() {
    let a = ArcDiagram::new(2, vec![(1, 2)]).unwrap();
    let na = n_of_arcs(&a).unwrap();
    assert_eq!(na, IsoClass::from_intervals(2, &[(2, 2), (2, 2), (1, 1)]));
    assert_eq!(na.dim_vector().d, vec![1, 2]);
    let qa = q_of_arcs(&a).unwrap();
    assert_eq!(qa, IsoClass::from_intervals(2, &[(2, 2), (1, 1), (1, 1)])); // U_{2,2} ⊕ I_1²

    let empty = ArcDiagram::new(2, vec![]).unwrap();
    let ne = n_of_arcs(&empty).unwrap();
    assert_eq!(ne, IsoClass::from_intervals(2, &[(1, 2), (2, 2)])); // P_1 ⊕ P_2
    let qe = q_of_arcs(&empty).unwrap();
    assert_eq!(qe, IsoClass::from_intervals(2, &[(1, 1), (1, 2)])); // I_1 ⊕ I_2
}

#[test]
fn dual_examples_and_involution() {
    let a = ArcDiagram::new(2, vec![(1, 2)]).unwrap();
    assert_eq!(dual(&a).arcs, vec![]);
    let empty = ArcDiagram::new(2, vec![]).unwrap();
    assert_eq!(dual(&empty).arcs, vec![(1, 2)]);
    for n in 1..=6 {
        for a in enumerate_arcs(n) {
            assert_eq!(op(&op(&a)), a);
            let once = op(&dual(&a));
            let twice = op(&dual(&once));
            assert_eq!(twice, a, "A={:?}", a.arcs);
        }
    }
}

#[test]
fn ses_small_example() {
    let a = ArcDiagram::new(2, vec![(1, 2)]).unwrap();
    let rep = verify_ses(&a).unwrap();
    assert!(rep.all_ok());
    assert_eq!(rep.hom, 3);
}

#[test]
fn ses_all_diagrams() {
    for n in 1..=5 {
        for a in enumerate_arcs(n) {
            let rep = verify_ses(&a).unwrap();
            assert!(rep.all_ok(), "n={} A={:?} report={:?}", n, a.arcs, rep);
            assert_eq!(rep.hom, n * (n + 1) / 2);
        }
    }
}

#[test]
fn component_multiset_is_arc_family() {
    use lindeg::homalg::flag_components;
    for n in 2..=5 {
        let m2 = named_rep(&NamedRep::M2, n).unwrap();
        let fc = flag_components(&m2).unwrap();
        assert!(fc.min_dim);
        let mut expected: Vec<IsoClass> = enumerate_arcs(n)
            .iter()
            .map(|a| n_of_arcs(a).unwrap())
            .collect();
        expected.sort();
        assert_eq!(fc.components, expected, "n={}", n);
    }
}

#[test]
fn desing_totals() {
    for n in 1..=5 {
        for a in enumerate_arcs(n) {
            let rep = desing_dims(&a, 0xD15EA5E, 3).unwrap();
            assert_eq!(rep.total, n * (n + 1) / 2, "n={} A={:?}", n, a.arcs);
            assert_eq!(rep.steps.len(), n * (n + 1) / 2);
            assert!(
                rep.closed_form_agrees,
                "closed-form b mismatch: n={} A={:?} steps={:?}",
                n,
                a.arcs,
                rep.steps
            );
        }
    }
}

#[test]
fn desing_simple_cases() {
    let empty = ArcDiagram::new(2, vec![]).unwrap();
    assert_eq!(desing_dims(&empty, 1, 3).unwrap().total, 3);
    let a = ArcDiagram::new(2, vec![(1, 2)]).unwrap();
    assert_eq!(desing_dims(&a, 1, 3).unwrap().total, 3);
}
