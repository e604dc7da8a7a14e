//! Command-line front end: JSON in, JSON out, named-representation
//! shortcuts, and batch verification suites.
//!
//! Exit codes: 0 success, 2 usage error, 1 mathematical error (printed as
//! {"error": code, "detail": message}) or a failed verification suite.

use clap::{Parser, Subcommand};
use lindeg::arcs::{desing_dims, dual, enumerate_arcs, verify_ses};
use lindeg::cells::{
    self, cell_dim, count_points_fq, layout, tangent_dim, FixedPoint,
};
use lindeg::core::{
    iso_from_ranks, json as core_json, named_rep, rank_tuple, ranks_from_iso, DimVector,
    IsoClass, NamedRep, RankTuple,
};
use lindeg::error::Error as MathError;
use lindeg::field::rat;
use lindeg::homalg::{degenerates_to_hom, degenerates_to_ranks, flag_components};
use lindeg::loci::{
    check_automorphism, classify, flat_orbit_census, gamma_pbw, rhyme_enumerate, slice_pbw,
    slice_rep, stabilizes_standard_flag, LowerParams, SliceParams, Witness,
};
use lindeg::pbw::{
    demazure_dim, ell_vector, enumerate_proj_seqs, h_vector, psi_weight, weyl_dim, weyl_word,
    ProjSeq,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "lindeg",
    version,
    about = "Linear degenerations of type-A flag varieties: rank tuples, locus \
             classification, components, cell decompositions, point counts, and \
             PBW-Schubert combinatorics."
)]
struct Cli {
    /// Cap the internal worker-thread count.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct RepArgs {
    /// Named representation: M0 | M1 | M2 | Mi:<list> | Ma:<list>.
    #[arg(long)]
    named: Option<String>,
    /// Quiver length n (required with --named).
    #[arg(long)]
    n: Option<usize>,
    /// Explicit representation as a JSON document (matrix or interval form).
    #[arg(long)]
    rep: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a point of the degeneration space into the locus hierarchy
    /// (flat / irreducible / normal / PBW / isomorphic fiber) with a witness.
    Classify {
        #[command(flatten)]
        rep: RepArgs,
    },
    /// Census of flat-irreducible orbits: realizable rank tuples above the
    /// minimal flat tuple vs the subset-sequence parametrization.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate broken rhyme schemes of length n-1; regular schemes
    /// parametrize the orbits of the PBW locus.
    Rhymes {
        #[arg(long)]
        n: usize,
        /// Keep only the regular schemes.
        #[arg(long)]
        regular: bool,
    },
    /// Enumerate non-crossing arc diagrams on n points, which label the
    /// irreducible components of the maximal flat degeneration.
    Arcs {
        #[arg(long)]
        n: usize,
    },
    /// Irreducible components of the complete degenerate flag variety of a
    /// representation, via the minimal-dimension subrepresentation sweep.
    Components {
        #[command(flatten)]
        rep: RepArgs,
    },
    /// Poincaré polynomial of the quiver Grassmannian Gr_e(M) from its
    /// torus-fixed-point cell decomposition.
    Poincare {
        #[command(flatten)]
        rep: RepArgs,
        /// Subrepresentation dimension vector, comma-separated.
        #[arg(long)]
        e: String,
    },
    /// Count the points of Gr_e(M) over a prime field by exhaustive
    /// subspace enumeration.
    Count {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        e: String,
        /// Field characteristic (prime).
        #[arg(long)]
        p: u64,
        /// Enumeration budget (node count).
        #[arg(long, default_value_t = cells::DEFAULT_COUNT_BUDGET)]
        budget: u64,
    },
    /// Cell and tangent-space dimension at a torus fixed point of Gr_e(M),
    /// given by the suffix starting column per segment (0 = empty).
    Tangent {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        e: String,
        /// Fixed point: starting columns, one per segment of the layout.
        #[arg(long)]
        starts: String,
    },
    /// Weyl-group element attached to a PBW degeneration: reduced word,
    /// height and position vectors.
    Schubert {
        #[arg(long)]
        n: usize,
        /// Degenerated directions, comma-separated (may be empty).
        #[arg(long, default_value = "")]
        i: String,
    },
    /// Compare the Demazure module dimension for the attached Weyl word and
    /// shifted weight against the Weyl dimension formula.
    DemazureCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        i: String,
        /// Dominant weight in fundamental-weight coordinates.
        #[arg(long)]
        lambda: String,
    },
    /// Transversal slice through the PBW locus (diagonal parameters) or the
    /// full triangular slice, as an explicit matrix representation.
    Slice {
        #[arg(long)]
        n: usize,
        /// Diagonal parameters λ_1,…,λ_{n−1} (rationals; PBW slice).
        #[arg(long)]
        diag: Option<String>,
        /// Full triangular parameters λ_{i,j}, row-major for 1≤i≤j≤n−1.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Sample elements of the automorphism group scheme over the PBW slice
    /// and verify the automorphism and stabilizer properties.
    GammaCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Run a named verification suite
    /// (ses | desing | census | rhymes | degeneration | demazure | cells | all).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0xACCE55)]
        seed: u64,
    },
}

enum CliError {
    Usage(String),
    Math(MathError),
}

impl From<MathError> for CliError {
    fn from(e: MathError) -> Self {
        CliError::Math(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_usize_list(s: &str, what: &str) -> CliResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("invalid {} entry: {:?}", what, t)))
        })
        .collect()
}

fn parse_i64_list(s: &str, what: &str) -> CliResult<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("invalid {} entry: {:?}", what, t)))
        })
        .collect()
}

fn parse_rational_list(s: &str, what: &str) -> CliResult<Vec<BigRational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            BigRational::from_str(t.trim())
                .map_err(|_| usage(format!("invalid {} entry: {:?}", what, t)))
        })
        .collect()
}

fn parse_named(spec: &str) -> CliResult<NamedRep> {
    let (head, tail) = match spec.split_once(':') {
        Some((h, t)) => (h, Some(t)),
        None => (spec, None),
    };
    match (head, tail) {
        ("M0", None) => Ok(NamedRep::M0),
        ("M1", None) => Ok(NamedRep::M1),
        ("M2", None) => Ok(NamedRep::M2),
        ("Mi", Some(t)) => Ok(NamedRep::Mi(parse_usize_list(t, "--named Mi list")?)),
        ("Ma", Some(t)) => {
            let a = parse_usize_list(t, "--named Ma list")?;
            if a.is_empty() {
                return Err(usage("--named Ma needs a non-empty multiplicity list"));
            }
            Ok(NamedRep::Ma(a))
        }
        _ => Err(usage(format!(
            "unknown named representation {:?} (expected M0|M1|M2|Mi:<list>|Ma:<list>)",
            spec
        ))),
    }
}

/// Resolve the representation arguments to an interval-multiplicity class.
fn resolve_iso(args: &RepArgs) -> CliResult<IsoClass> {
    match (&args.named, &args.rep) {
        (Some(name), None) => {
            let n = args
                .n
                .ok_or_else(|| usage("--named requires --n"))?;
            Ok(named_rep(&parse_named(name)?, n)?)
        }
        (None, Some(text)) => {
            let v: Value = serde_json::from_str(text)
                .map_err(|e| usage(format!("--rep is not valid JSON: {}", e)))?;
            if v.get("maps").is_some() {
                let rt = match core_json::matrix_rep_from_json(&v)? {
                    core_json::AnyRep::Q(rep) => rank_tuple(&rep)?,
                    core_json::AnyRep::Fp(_, rep) => rank_tuple(&rep)?,
                };
                Ok(iso_from_ranks(&rt)?)
            } else {
                Ok(core_json::iso_from_json(&v)?)
            }
        }
        (None, None) => Err(usage("supply either --named (with --n) or --rep")),
        (Some(_), Some(_)) => Err(usage("--named and --rep are mutually exclusive")),
    }
}

fn resolve_ranks(args: &RepArgs) -> CliResult<RankTuple> {
    Ok(ranks_from_iso(&resolve_iso(args)?))
}

fn witness_json(w: &Option<Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(Witness::Vertex(i)) => json!(i),
        Some(Witness::Pair(i, j)) => json!([i, j]),
    }
}

fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

fn bigint_json(x: &BigInt) -> Value {
    match i64::try_from(x.clone()) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

fn dim_vector(e: &str) -> CliResult<DimVector> {
    Ok(DimVector::new(parse_usize_list(e, "--e")?))
}

fn run(cmd: &Cmd) -> CliResult<Value> {
    match cmd {
        Cmd::Classify { rep } => {
            let report = classify(&resolve_ranks(rep)?)?;
            Ok(obj(vec![
                ("flat", json!(report.flat)),
                ("irreducible", json!(report.irreducible)),
                ("iso", json!(report.iso)),
                ("normal", json!(report.normal)),
                ("pbw", json!(report.pbw)),
                ("witness", witness_json(&report.witness)),
            ]))
        }
        Cmd::Orbits { n } => {
            let census = flat_orbit_census(*n);
            Ok(obj(vec![
                ("n", json!(n)),
                ("pcal_count", json!(census.pcal_count)),
                ("rank_count", json!(census.rank_count)),
            ]))
        }
        Cmd::Rhymes { n, regular } => {
            let schemes: Vec<_> = rhyme_enumerate(*n)
                .into_iter()
                .filter(|s| !regular || s.is_regular())
                .collect();
            Ok(obj(vec![
                ("count", json!(schemes.len())),
                (
                    "schemes",
                    Value::Array(schemes.iter().map(|s| json!(s.b)).collect()),
                ),
            ]))
        }
        Cmd::Arcs { n } => {
            let diagrams = enumerate_arcs(*n);
            let list: Vec<Value> = diagrams
                .iter()
                .map(|a| {
                    obj(vec![
                        ("arcs", json!(a.arcs)),
                        ("dual", json!(dual(a).arcs)),
                    ])
                })
                .collect();
            Ok(obj(vec![
                ("count", json!(list.len())),
                ("diagrams", Value::Array(list)),
            ]))
        }
        Cmd::Components { rep } => {
            let iso = resolve_iso(rep)?;
            let fc = flag_components(&iso)?;
            Ok(obj(vec![
                (
                    "components",
                    Value::Array(fc.components.iter().map(core_json::iso_to_json).collect()),
                ),
                ("count", json!(fc.components.len())),
                ("min_dim", json!(fc.min_dim)),
            ]))
        }
        Cmd::Poincare { rep, e } => {
            let iso = resolve_iso(rep)?;
            let ev = dim_vector(e)?;
            Ok(obj(vec![("coeffs", json!(cells::poincare(&iso, &ev)))]))
        }
        Cmd::Count { rep, e, p, budget } => {
            let iso = resolve_iso(rep)?;
            let ev = dim_vector(e)?;
            let count = count_points_fq(&iso, &ev, *p, *budget)?;
            Ok(obj(vec![("count", json!(count))]))
        }
        Cmd::Tangent { rep, e, starts } => {
            let iso = resolve_iso(rep)?;
            let ev = dim_vector(e)?;
            let lay = layout(&iso);
            let fp = FixedPoint {
                starts: parse_usize_list(starts, "--starts")?,
            };
            validate_fixed_point(&lay, &ev, &fp)?;
            Ok(obj(vec![
                ("cell_dim", json!(cell_dim(&lay, &fp))),
                ("tangent_dim", json!(tangent_dim(&lay, &fp))),
            ]))
        }
        Cmd::Schubert { n, i } => {
            let seq = ProjSeq::new(*n, parse_usize_list(i, "--i")?)?;
            let w = weyl_word(&seq);
            Ok(obj(vec![
                ("ell", json!(ell_vector(&seq))),
                ("h", json!(h_vector(&seq))),
                ("length", json!(w.word.len())),
                ("reduced", json!(w.is_reduced())),
                ("word", json!(w.word)),
            ]))
        }
        Cmd::DemazureCheck { n, i, lambda } => {
            let seq = ProjSeq::new(*n, parse_usize_list(i, "--i")?)?;
            let lam = parse_i64_list(lambda, "--lambda")?;
            let w = weyl_word(&seq);
            let lam_i = psi_weight(&seq, &lam)?;
            let dem = demazure_dim(&w, &lam_i)?;
            let weyl = weyl_dim(*n + 1, &lam)?;
            Ok(obj(vec![
                ("demazure", bigint_json(&dem)),
                ("equal", json!(dem == weyl)),
                ("weyl", bigint_json(&weyl)),
            ]))
        }
        Cmd::Slice { n, diag, lambda } => {
            let rep = match (diag, lambda) {
                (Some(d), None) => slice_pbw(*n, &parse_rational_list(d, "--diag")?)?,
                (None, Some(l)) => {
                    let entries = parse_rational_list(l, "--lambda")?;
                    let want = if *n >= 1 { n * (n - 1) / 2 } else { 0 };
                    if entries.len() != want {
                        return Err(usage(format!(
                            "--lambda needs {} triangular entries for n={}",
                            want, n
                        )));
                    }
                    let mut params = SliceParams::zeros(*n);
                    let mut it = entries.into_iter();
                    for i in 1..*n {
                        for j in i..*n {
                            params.set(i, j, it.next().unwrap());
                        }
                    }
                    slice_rep(&params)
                }
                _ => return Err(usage("supply exactly one of --diag or --lambda")),
            };
            let rt = rank_tuple(&rep)?;
            let report = classify(&rt)?;
            Ok(obj(vec![
                (
                    "classify",
                    obj(vec![
                        ("flat", json!(report.flat)),
                        ("irreducible", json!(report.irreducible)),
                        ("iso", json!(report.iso)),
                        ("normal", json!(report.normal)),
                        ("pbw", json!(report.pbw)),
                        ("witness", witness_json(&report.witness)),
                    ]),
                ),
                ("ranks", core_json::rank_tuple_to_json(&rt)),
                ("rep", core_json::matrix_rep_to_json(&rep)),
            ]))
        }
        Cmd::GammaCheck { n, seed, samples } => {
            let n = *n;
            if n < 2 {
                return Err(usage("--n must be at least 2"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut all_auto = true;
            let mut stab_consistent = true;
            for _ in 0..*samples {
                let diag: Vec<BigRational> =
                    (0..n - 1).map(|_| rat(rng.gen_range(0..5))).collect();
                let mut x = LowerParams::zeros(n);
                let mut nonzero = false;
                for p in 2..=n + 1 {
                    for q in 1..p {
                        let v = rng.gen_range(-20..20);
                        nonzero |= v != 0;
                        x.set(p, q, rat(v));
                    }
                }
                let g = gamma_pbw(n, &diag, &x)?;
                let f = slice_pbw(n, &diag)?;
                all_auto &= check_automorphism(&g, &f)?;
                stab_consistent &= stabilizes_standard_flag(&g) == !nonzero;
            }
            Ok(obj(vec![
                ("all_automorphisms", json!(all_auto)),
                ("samples", json!(samples)),
                ("seed", json!(seed)),
                ("stabilizer_consistent", json!(stab_consistent)),
            ]))
        }
        Cmd::Verify { suite, seed } => run_verify(suite, *seed),
    }
}

/// Require the starting columns to define a genuine torus fixed point of
/// Gr_e(M): one start per segment, inside the segment, with column counts
/// matching e.
fn validate_fixed_point(
    lay: &cells::SegmentLayout,
    e: &DimVector,
    fp: &FixedPoint,
) -> CliResult<()> {
    let n = lay.n;
    if e.d.len() != n {
        return Err(usage(format!("--e must have {} entries", n)));
    }
    if fp.starts.len() != lay.segments.len() {
        return Err(usage(format!(
            "--starts must have {} entries (one per segment)",
            lay.segments.len()
        )));
    }
    let dims = lay.dims();
    if e.d.iter().zip(&dims.d).any(|(&e, &d)| e > d) {
        return Err(usage("--e exceeds the dimension vector of the representation"));
    }
    let mut cols = vec![0usize; n];
    for (&s, &(a, b)) in fp.starts.iter().zip(&lay.segments) {
        if s == 0 {
            continue;
        }
        if s < a || s > b {
            return Err(usage(format!(
                "start {} outside its segment ({},{})",
                s, a, b
            )));
        }
        for c in s..=b {
            cols[c - 1] += 1;
        }
    }
    if cols != e.d {
        return Err(usage(
            "the starting columns do not realize the requested dimension vector",
        ));
    }
    Ok(())
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

fn run_verify(suite: &str, seed: u64) -> CliResult<Value> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let known = ["ses", "desing", "census", "rhymes", "degeneration", "demazure", "cells"];
    let selected: Vec<&str> = if suite == "all" {
        known.to_vec()
    } else if known.contains(&suite) {
        vec![suite]
    } else {
        return Err(usage(format!(
            "unknown suite {:?} (expected one of {} or all)",
            suite,
            known.join(" | ")
        )));
    };
    for s in selected {
        match s {
            "ses" => {
                for n in 1..=5usize {
                    let ok = enumerate_arcs(n).iter().all(|a| {
                        verify_ses(a)
                            .map(|r| r.all_ok() && r.hom == n * (n + 1) / 2)
                            .unwrap_or(false)
                    });
                    checks.push((format!("ses n={}", n), ok));
                }
            }
            "desing" => {
                for n in 1..=5usize {
                    let ok = enumerate_arcs(n).iter().all(|a| {
                        desing_dims(a, seed, 3)
                            .map(|r| r.total == n * (n + 1) / 2 && r.closed_form_agrees)
                            .unwrap_or(false)
                    });
                    checks.push((format!("desing n={}", n), ok));
                }
            }
            "census" => {
                for (n, expect) in [(2usize, (3, 3)), (3, (13, 13)), (4, (77, 83))] {
                    let c = flat_orbit_census(n);
                    checks.push((
                        format!("census n={}", n),
                        (c.rank_count, c.pcal_count) == expect,
                    ));
                }
            }
            "rhymes" => {
                let all = rhyme_enumerate(4);
                checks.push(("rhymes n=4 total=15".into(), all.len() == 15));
                checks.push((
                    "rhymes n=4 regular=8".into(),
                    all.iter().filter(|s| s.is_regular()).count() == 8,
                ));
            }
            "degeneration" => {
                for n in 1..=3usize {
                    let classes = all_classes_exact(n, &vec![n + 1; n]);
                    let ok = classes.iter().all(|a| {
                        classes.iter().all(|b| {
                            degenerates_to_ranks(&ranks_from_iso(a), &ranks_from_iso(b))
                                .and_then(|x| degenerates_to_hom(a, b).map(|y| x == y))
                                .unwrap_or(false)
                        })
                    });
                    checks.push((format!("degeneration order n={}", n), ok));
                }
            }
            "demazure" => {
                for n in 1..=3usize {
                    let mut ok = true;
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
                            let good = psi_weight(&i, &lam)
                                .and_then(|li| demazure_dim(&w, &li))
                                .and_then(|d| weyl_dim(n + 1, &lam).map(|wd| d == wd))
                                .unwrap_or(false);
                            ok &= good;
                        }
                    }
                    checks.push((format!("demazure n={}", n), ok));
                }
            }
            "cells" => {
                let eval = |coeffs: &[usize], p: u64| -> u64 {
                    coeffs
                        .iter()
                        .enumerate()
                        .map(|(d, &c)| c as u64 * p.pow(d as u32))
                        .sum()
                };
                for n in 1..=2usize {
                    let ev = DimVector::new((1..=n).collect());
                    let ok = all_classes_exact(n, &vec![n + 1; n]).iter().all(|iso| {
                        let coeffs = cells::poincare(iso, &ev);
                        [2u64, 3, 5].iter().all(|&p| {
                            count_points_fq(iso, &ev, p, cells::DEFAULT_COUNT_BUDGET)
                                .map(|c| c == eval(&coeffs, p))
                                .unwrap_or(false)
                        })
                    });
                    checks.push((format!("counting identity n={}", n), ok));
                }
                let iso = named_rep(&NamedRep::M2, 3).map_err(CliError::Math)?;
                let ev = DimVector::new(vec![1, 2, 3]);
                let coeffs = cells::poincare(&iso, &ev);
                let ok = count_points_fq(&iso, &ev, 2, cells::DEFAULT_COUNT_BUDGET)
                    .map(|c| c == eval(&coeffs, 2))
                    .unwrap_or(false);
                checks.push(("counting identity M2 n=3 p=2".into(), ok));
            }
            _ => unreachable!(),
        }
    }
    let ok = checks.iter().all(|(_, p)| *p);
    Ok(obj(vec![
        (
            "checks",
            Value::Array(
                checks
                    .iter()
                    .map(|(name, pass)| {
                        obj(vec![("name", json!(name)), ("pass", json!(pass))])
                    })
                    .collect(),
            ),
        ),
        ("ok", json!(ok)),
        ("suite", json!(suite)),
    ]))
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match run(&cli.cmd) {
        Ok(out) => {
            println!("{}", serde_json::to_string(&out).unwrap());
            // a verification suite reports per-check results; a failed suite
            // still prints its JSON but signals the failure in the exit code
            if out.get("ok").map(|v| v == &json!(false)).unwrap_or(false) {
                std::process::exit(1);
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            std::process::exit(2);
        }
        Err(CliError::Math(e)) => {
            println!(
                "{}",
                serde_json::to_string(&obj(vec![
                    ("detail", json!(e.to_string())),
                    ("error", json!(e.code())),
                ]))
                .unwrap()
            );
            std::process::exit(1);
        }
    }
}
