//! Acceptance gate: twelve end-to-end checks, one pass/fail line each.

use lindeg::arcs::*;
use lindeg::cells::{
    self, cell_dim, count_points_fq, fixed_points, layout, tangent_dim, top_cells, FixedPoint,
};
use lindeg::core::*;
use lindeg::field::rat;
use lindeg::homalg::*;
use lindeg::loci::*;
use lindeg::matrix::Mat;
use lindeg::pbw::*;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn flag_e(n: usize) -> DimVector {
    DimVector {
        d: (1..=n).collect(),
    }
}

fn all_classes_exact(n: usize, d: &[usize]) -> Vec<IsoClass> {
    fn rec(
        intervals: &[(usize, usize)],
        idx: usize,
        cur: &mut IsoClass,
        used: &mut Vec<usize>,
        d: &[usize],
        out: &mut Vec<IsoClass>,
    ) {
        if idx == intervals.len() {
            if used == d {
                out.push(cur.clone());
            }
            return;
        }
        let (i, j) = intervals[idx];
        let cap = (i..=j).map(|v| d[v - 1] - used[v - 1]).min().unwrap();
        for m in 0..=cap {
            if m > 0 {
                for v in i..=j {
                    used[v - 1] += 1;
                }
                cur.add(i, j, 1);
            }
            rec(intervals, idx + 1, cur, used, d, out);
        }
        let m = cur.get(i, j);
        cur.set(i, j, 0);
        for v in i..=j {
            used[v - 1] -= m;
        }
    }
    let intervals: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut cur = IsoClass::zero(n);
    let mut used = vec![0usize; n];
    rec(&intervals, 0, &mut cur, &mut used, d, &mut out);
    out
}

fn catalan(n: usize) -> usize {
    let mut c = vec![1usize];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[n]
}

// 1. rank tuples of the three reference representations, n = 2..8
fn criterion_01() -> Check {
    for n in 2..=8 {
        for (kind, expect) in [
            (NamedRep::M0, r0(n)),
            (NamedRep::M1, r1(n)),
            (NamedRep::M2, r2(n)),
        ] {
            let iso = named_rep(&kind, n).map_err(|e| e.to_string())?;
            ensure!(
                ranks_from_iso(&iso) == expect,
                "rank tuple mismatch for {:?}, n={}",
                kind,
                n
            );
        }
    }
    Ok(())
}

// 2. the fifteen length-3 broken rhyme schemes, eight of them regular
fn criterion_02() -> Check {
    let schemes = rhyme_enumerate(4);
    let printed: Vec<Vec<usize>> = [
        [0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2], [1, 0, 0], [1, 0, 1],
        [1, 0, 2], [1, 1, 0], [1, 1, 1], [1, 1, 2], [1, 2, 0], [1, 2, 1], [1, 2, 2],
        [1, 2, 3],
    ]
    .iter()
    .map(|r| r.to_vec())
    .collect();
    ensure!(
        schemes.iter().map(|s| s.b.clone()).collect::<Vec<_>>() == printed,
        "scheme enumeration differs from the printed list"
    );
    let regular: Vec<Vec<usize>> = schemes
        .iter()
        .filter(|s| s.is_regular())
        .map(|s| s.b.clone())
        .collect();
    let expected_regular: Vec<Vec<usize>> = [
        [0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 2], [1, 0, 0], [1, 0, 2], [1, 2, 0],
        [1, 2, 3],
    ]
    .iter()
    .map(|r| r.to_vec())
    .collect();
    ensure!(regular == expected_regular, "regular sublist mismatch");
    Ok(())
}

// 3. the n=4 Schubert table: words, h-vectors, representations
fn criterion_03() -> Check {
    let rows: Vec<(&[usize], Vec<usize>, Vec<usize>)> = vec![
        (&[], vec![1, 2, 3, 4, 1, 2, 3, 1, 2, 1], vec![0, 0, 0, 0]),
        (&[1], vec![2, 3, 4, 5, 2, 3, 4, 2, 3, 1], vec![0, 1, 1, 1]),
        (&[2], vec![2, 3, 4, 5, 2, 3, 4, 1, 2, 1], vec![0, 0, 1, 1]),
        (&[3], vec![2, 3, 4, 5, 1, 2, 3, 1, 2, 1], vec![0, 0, 0, 1]),
        (&[1, 2], vec![3, 4, 5, 6, 3, 4, 5, 2, 3, 1], vec![0, 1, 2, 2]),
        (&[1, 3], vec![3, 4, 5, 6, 2, 3, 4, 2, 3, 1], vec![0, 1, 1, 2]),
        (&[2, 3], vec![3, 4, 5, 6, 2, 3, 4, 1, 2, 1], vec![0, 0, 1, 2]),
        (&[1, 2, 3], vec![4, 5, 6, 7, 3, 4, 5, 2, 3, 1], vec![0, 1, 2, 3]),
    ];
    let n = 4;
    for (seq, word, h) in rows {
        let i = ProjSeq::new(n, seq.to_vec()).map_err(|e| e.to_string())?;
        ensure!(h_vector(&i) == h, "h-vector mismatch for {:?}", seq);
        let w = weyl_word(&i);
        ensure!(w.word == word, "word mismatch for {:?}", seq);
        ensure!(w.is_reduced() && w.word.len() == 10, "not reduced for {:?}", seq);
        let m = named_rep(&NamedRep::Mi(seq.to_vec()), n).map_err(|e| e.to_string())?;
        let mut expect = IsoClass::zero(n);
        expect.add(1, n, n + 1 - seq.len());
        for &im in seq {
            expect.add(1, im, 1);
            expect.add(im + 1, n, 1);
        }
        ensure!(m == expect, "representation mismatch for {:?}", seq);
    }
    Ok(())
}

// 4. Catalan-many irreducible components, all of the minimal dimension
fn criterion_04() -> Check {
    for n in 2..=6 {
        let m2 = named_rep(&NamedRep::M2, n).map_err(|e| e.to_string())?;
        let fc = flag_components(&m2).map_err(|e| e.to_string())?;
        ensure!(fc.min_dim, "dimension not minimal at n={}", n);
        ensure!(
            fc.components.len() == catalan(n),
            "expected {} components at n={}, got {}",
            catalan(n),
            n,
            fc.components.len()
        );
        for c in &fc.components {
            let d = stratum_dim(c, &m2).map_err(|e| e.to_string())?;
            ensure!(d == n * (n + 1) / 2, "stratum dim {} at n={}", d, n);
        }
        let mut expected: Vec<IsoClass> = enumerate_arcs(n)
            .iter()
            .map(|a| n_of_arcs(a).unwrap())
            .collect();
        expected.sort();
        ensure!(fc.components == expected, "component multiset differs at n={}", n);
    }
    Ok(())
}

// 5. counting identity: cell generating function vs finite-field points
fn criterion_05() -> Check {
    let eval = |coeffs: &[usize], p: u64| -> u64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(d, &c)| c as u64 * p.pow(d as u32))
            .sum()
    };
    for n in 1..=3 {
        let ev = flag_e(n);
        for iso in all_classes_exact(n, &vec![n + 1; n]) {
            let coeffs = cells::poincare(&iso, &ev);
            for p in [2u64, 3, 5] {
                let count = count_points_fq(&iso, &ev, p, cells::DEFAULT_COUNT_BUDGET)
                    .map_err(|e| e.to_string())?;
                ensure!(
                    count == eval(&coeffs, p),
                    "count mismatch n={} p={} iso={:?}",
                    n,
                    p,
                    iso
                );
            }
        }
    }
    // the large cases run at p=2 only (enumeration budget)
    let n = 4;
    let ev = flag_e(n);
    let mut named = vec![NamedRep::M0, NamedRep::M1, NamedRep::M2];
    named.extend((1..n).map(NamedRep::Ai));
    for kind in named {
        let iso = named_rep(&kind, n).map_err(|e| e.to_string())?;
        let coeffs = cells::poincare(&iso, &ev);
        let count = count_points_fq(&iso, &ev, 2, cells::DEFAULT_COUNT_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure!(
            count == eval(&coeffs, 2),
            "count mismatch for {:?} at n=4",
            kind
        );
    }
    Ok(())
}

// 6. reference fixed points: cell and tangent dimensions
fn criterion_06() -> Check {
    let m2 = named_rep(&NamedRep::M2, 4).map_err(|e| e.to_string())?;
    let lay = layout(&m2);
    let fp = FixedPoint {
        starts: vec![4, 0, 3, 2, 2, 0, 0, 0, 0, 1, 0],
    };
    ensure!(cell_dim(&lay, &fp) == 10, "reference cell dim");
    ensure!(tangent_dim(&lay, &fp) == 11, "reference tangent dim");

    let ma = named_rep(&NamedRep::Ai(2), 4).map_err(|e| e.to_string())?;
    let lay2 = layout(&ma);
    let triple = [
        (vec![3, 4, 1, 2, 0, 0, 0], 10),
        (vec![3, 3, 1, 4, 0, 2, 0], 10),
        (vec![3, 4, 1, 3, 0, 2, 0], 9),
    ];
    for (starts, expect) in triple {
        let fp = FixedPoint { starts };
        ensure!(
            cell_dim(&lay2, &fp) == expect,
            "cell dim {} expected for {:?}",
            expect,
            fp.starts
        );
    }
    Ok(())
}

// 7. the short exact sequence through the middle term, all diagrams n <= 5
fn criterion_07() -> Check {
    for n in 1..=5 {
        for a in enumerate_arcs(n) {
            let rep = verify_ses(&a).map_err(|e| e.to_string())?;
            ensure!(rep.all_ok(), "ses checks fail: n={} A={:?} {:?}", n, a.arcs, rep);
            ensure!(
                rep.hom == n * (n + 1) / 2,
                "hom dim {} for n={} A={:?}",
                rep.hom,
                n,
                a.arcs
            );
        }
    }
    Ok(())
}

// 8. desingularization tower dimension totals, three samples each
fn criterion_08() -> Check {
    for n in 1..=5 {
        for a in enumerate_arcs(n) {
            let rep = desing_dims(&a, 0xACCE55, 3).map_err(|e| e.to_string())?;
            ensure!(
                rep.total == n * (n + 1) / 2,
                "tower total {} for n={} A={:?}",
                rep.total,
                n,
                a.arcs
            );
        }
    }
    Ok(())
}

// 9. Demazure dimension equality over all projection sequences, n <= 3
fn criterion_09() -> Check {
    for n in 1..=3 {
        for i in enumerate_proj_seqs(n) {
            let w = weyl_word(&i);
            let mut lambdas: Vec<Vec<i64>> = (0..n)
                .map(|r| {
                    let mut v = vec![0i64; n];
                    v[r] = 1;
                    v
                })
                .collect();
            lambdas.push(vec![1; n]);
            for lam in lambdas {
                let lam_i = psi_weight(&i, &lam).map_err(|e| e.to_string())?;
                let dem = demazure_dim(&w, &lam_i).map_err(|e| e.to_string())?;
                let weyl = weyl_dim(n + 1, &lam).map_err(|e| e.to_string())?;
                ensure!(
                    dem == weyl,
                    "dimension mismatch n={} i={:?} λ={:?}",
                    n,
                    i.seq,
                    lam
                );
            }
        }
    }
    Ok(())
}

// 10. automorphism group elements on the slice, stabilizers, n=3 strata
fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE55);
    let random_lower = |n: usize, rng: &mut ChaCha8Rng| {
        let mut x = LowerParams::zeros(n);
        for p in 2..=n + 1 {
            for q in 1..p {
                x.set(p, q, rat(rng.gen_range(-20..20)));
            }
        }
        x
    };
    for n in 2..=4usize {
        for _ in 0..20 {
            let diag: Vec<BigRational> = (0..n - 1).map(|_| rat(rng.gen_range(0..5))).collect();
            let x = random_lower(n, &mut rng);
            let g = gamma_pbw(n, &diag, &x).map_err(|e| e.to_string())?;
            let f = slice_pbw(n, &diag).map_err(|e| e.to_string())?;
            ensure!(
                check_automorphism(&g, &f).map_err(|e| e.to_string())?,
                "not an automorphism at n={}",
                n
            );
            let nonzero = (2..=n + 1).any(|p| (1..p).any(|q| *x.get(p, q) != rat(0)));
            ensure!(
                stabilizes_standard_flag(&g) == !nonzero,
                "stabilizer not trivial at n={}",
                n
            );
        }
        let diag: Vec<BigRational> = (0..n - 1).map(|_| rat(3)).collect();
        let g = gamma_pbw(n, &diag, &LowerParams::zeros(n)).map_err(|e| e.to_string())?;
        ensure!(
            g.iter().all(|m| m.sub(&Mat::identity(n + 1, rat(0))).is_zero()),
            "x = 0 must give the identity at n={}",
            n
        );
    }
    // the displayed n=3 automorphism triple on all five strata of the slice
    let strata: Vec<(i64, i64, i64)> = vec![(2, 3, 5), (2, 3, 0), (0, 3, 5), (0, 7, 0), (0, 0, 0)];
    for (l11, l12, l22) in strata {
        let mut p = SliceParams::zeros(3);
        p.set(1, 1, rat(l11));
        p.set(1, 2, rat(l12));
        p.set(2, 2, rat(l22));
        let f = slice_rep(&p);
        for _ in 0..10 {
            let x = random_lower(3, &mut rng);
            let g = gamma_slice_n3(&p, &x).map_err(|e| e.to_string())?;
            ensure!(
                check_automorphism(&g, &f).map_err(|e| e.to_string())?,
                "triple fails on stratum λ=({},{},{})",
                l11,
                l12,
                l22
            );
        }
    }
    Ok(())
}

// 11. irreducibility and flatness read off the top-dimensional cells
fn criterion_11() -> Check {
    for n in 2..=4 {
        let ev = flag_e(n);
        let r1t = r1(n);
        for iso in all_classes_exact(n, &vec![n + 1; n]) {
            if !ranks_from_iso(&iso).dominates(&r1t).map_err(|e| e.to_string())? {
                continue;
            }
            let tops = top_cells(&iso, &ev);
            ensure!(
                tops.len() == 1,
                "{} top cells for an irreducible point, n={} iso={:?}",
                tops.len(),
                n,
                iso
            );
            let lay = layout(&iso);
            ensure!(
                cell_dim(&lay, &tops[0]) == n * (n + 1) / 2,
                "top cell dim at n={}",
                n
            );
        }
    }
    for n in 2..=5 {
        let ev = flag_e(n);
        for i in 1..n {
            let iso = named_rep(&NamedRep::Ai(i), n).map_err(|e| e.to_string())?;
            let tops = top_cells(&iso, &ev);
            let lay = layout(&iso);
            ensure!(
                tops.len() >= 2 && cell_dim(&lay, &tops[0]) == n * (n + 1) / 2,
                "reducible fiber not detected for Ai({}) at n={}",
                i,
                n
            );
        }
        for i in 1..n {
            for j in i..n {
                let iso = named_rep(&NamedRep::Aij(i, j), n).map_err(|e| e.to_string())?;
                let lay = layout(&iso);
                let max = fixed_points(&lay, &ev)
                    .iter()
                    .map(|fp| cell_dim(&lay, fp))
                    .max()
                    .unwrap_or(0);
                ensure!(
                    max > n * (n + 1) / 2,
                    "non-flat fiber has dim {} for Aij({},{}) at n={}",
                    max,
                    i,
                    j,
                    n
                );
            }
        }
    }
    Ok(())
}

// 12. degeneration order equals hom order, exhaustively
fn criterion_12() -> Check {
    for n in 1..=3usize {
        let classes = all_classes_exact(n, &vec![n + 1; n]);
        for a in &classes {
            for b in &classes {
                let by_ranks = degenerates_to_ranks(&ranks_from_iso(a), &ranks_from_iso(b))
                    .map_err(|e| e.to_string())?;
                let by_hom = degenerates_to_hom(a, b).map_err(|e| e.to_string())?;
                ensure!(by_ranks == by_hom, "order mismatch n={} a={:?} b={:?}", n, a, b);
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance_gate() {
    let checks: Vec<(&str, fn() -> Check)> = vec![
        ("named representation rank tuples (n = 2..8)", criterion_01),
        ("broken rhyme schemes of length 3 (15 total, 8 regular)", criterion_02),
        ("n=4 Schubert table (words, h-vectors, representations)", criterion_03),
        ("Catalan components of the maximal degeneration (n = 2..6)", criterion_04),
        ("counting identity: cells vs finite-field points", criterion_05),
        ("reference cell and tangent dimensions", criterion_06),
        ("short exact sequence checks for all arc diagrams (n <= 5)", criterion_07),
        ("desingularization tower totals (n <= 5, 3 samples)", criterion_08),
        ("Demazure dimension equality (n <= 3)", criterion_09),
        ("slice automorphisms and stabilizers", criterion_10),
        ("irreducibility and flatness via top cells", criterion_11),
        ("degeneration order vs hom order (n <= 3)", criterion_12),
    ];
    let mut failed = Vec::new();
    for (idx, (name, check)) in checks.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:2}: PASS — {}", idx + 1, name),
            Err(msg) => {
                println!("criterion {:2}: FAIL — {}: {}", idx + 1, name, msg);
                failed.push(idx + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
