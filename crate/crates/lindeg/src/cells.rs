//! Torus-fixed-point cell decomposition of quiver Grassmannians Gr_e(M):
//! fixed points (coordinate subrepresentations of the canonical form), cell
//! and tangent dimensions, Poincaré polynomials, isomorphism strata, and an
//! exact finite-field point-counting oracle.

use crate::core::json::is_prime;
use crate::core::{canonical_rep_fp, segment_order, DimVector, IsoClass};
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::homalg::{end_dim, hom_dim, stratum_dim};
use crate::matrix::Subspace;
use std::collections::BTreeMap;

/// Interval segments of a representation, sorted by increasing grading
/// degree deg U_{i,j} = j−i+1 + C(n+1,2) − C(j+1,2). Within every column,
/// later segments are killed by the outgoing arrow before earlier ones, so
/// the order is compatible with the attracting-cell normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SegmentLayout {
    pub n: usize,
    /// Intervals [a_k, b_k], one per indecomposable summand.
    pub segments: Vec<(usize, usize)>,
}

pub fn layout(iso: &IsoClass) -> SegmentLayout {
    SegmentLayout {
        n: iso.n,
        segments: segment_order(iso),
    }
}

impl SegmentLayout {
    pub fn dims(&self) -> DimVector {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.segments {
            for c in a..=b {
                d[c - 1] += 1;
            }
        }
        DimVector { d }
    }
}

/// A torus-fixed point of the quiver Grassmannian: per segment the chosen
/// suffix start s_k (basis vectors v_k^{(s_k)}, …, v_k^{(b_k)} lie in the
/// subrepresentation), with 0 encoding the empty suffix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FixedPoint {
    pub starts: Vec<usize>,
}

/// All suffix choices whose column counts equal `e`, in lexicographic order
/// of the starts vectors (0 = empty first).
pub fn fixed_points(lay: &SegmentLayout, e: &DimVector) -> Vec<FixedPoint> {
    let n = lay.n;
    assert_eq!(e.d.len(), n);
    let m = lay.segments.len();
    // cap[idx][c] = number of segments idx.. covering column c+1
    let mut cap = vec![vec![0usize; n]; m + 1];
    for idx in (0..m).rev() {
        cap[idx] = cap[idx + 1].clone();
        let (a, b) = lay.segments[idx];
        for c in a..=b {
            cap[idx][c - 1] += 1;
        }
    }
    let mut out = Vec::new();
    let mut starts = vec![0usize; m];
    let mut cnt = vec![0usize; n];
    fn rec(
        lay: &SegmentLayout,
        e: &[usize],
        cap: &[Vec<usize>],
        idx: usize,
        starts: &mut Vec<usize>,
        cnt: &mut Vec<usize>,
        out: &mut Vec<FixedPoint>,
    ) {
        if cnt.iter().zip(e).any(|(&c, &t)| c > t) {
            return;
        }
        if cnt
            .iter()
            .zip(e)
            .zip(&cap[idx])
            .any(|((&c, &t), &r)| c + r < t)
        {
            return;
        }
        if idx == lay.segments.len() {
            out.push(FixedPoint {
                starts: starts.clone(),
            });
            return;
        }
        let (a, b) = lay.segments[idx];
        starts[idx] = 0;
        rec(lay, e, cap, idx + 1, starts, cnt, out);
        for s in a..=b {
            starts[idx] = s;
            for c in s..=b {
                cnt[c - 1] += 1;
            }
            rec(lay, e, cap, idx + 1, starts, cnt, out);
            for c in s..=b {
                cnt[c - 1] -= 1;
            }
        }
        starts[idx] = 0;
    }
    rec(lay, &e.d, &cap, 0, &mut starts, &mut cnt, &mut out);
    out
}

/// Dimension of the attracting cell of a fixed point: sum over the suffix
/// sources v_k^{(s_k)} of the number of lower segments present at column s_k
/// whose basis vector there is outside the subrepresentation.
pub fn cell_dim(lay: &SegmentLayout, fp: &FixedPoint) -> usize {
    let segs = &lay.segments;
    assert_eq!(segs.len(), fp.starts.len());
    let mut total = 0;
    for (k, &s) in fp.starts.iter().enumerate() {
        if s == 0 {
            continue;
        }
        for j in k + 1..segs.len() {
            let (a, b) = segs[j];
            if a <= s && s <= b {
                let in_sub = fp.starts[j] != 0 && fp.starts[j] <= s;
                if !in_sub {
                    total += 1;
                }
            }
        }
    }
    total
}

/// Iso class of the subrepresentation at a fixed point: multiset of the
/// chosen suffixes [s_k, b_k].
pub fn suffix_iso(lay: &SegmentLayout, fp: &FixedPoint) -> IsoClass {
    let mut cls = IsoClass::zero(lay.n);
    for (&(_, b), &s) in lay.segments.iter().zip(&fp.starts) {
        if s != 0 {
            cls.add(s, b, 1);
        }
    }
    cls
}

/// Iso class of the quotient at a fixed point: multiset of the complementary
/// prefixes [a_k, s_k−1] (the whole segment when the suffix is empty).
pub fn quotient_iso(lay: &SegmentLayout, fp: &FixedPoint) -> IsoClass {
    let mut cls = IsoClass::zero(lay.n);
    for (&(a, b), &s) in lay.segments.iter().zip(&fp.starts) {
        if s == 0 {
            cls.add(a, b, 1);
        } else if s > a {
            cls.add(a, s - 1, 1);
        }
    }
    cls
}

/// dim Hom(L, M/L) for the coordinate subrepresentation L at the fixed point.
pub fn tangent_dim(lay: &SegmentLayout, fp: &FixedPoint) -> usize {
    hom_dim(&suffix_iso(lay, fp), &quotient_iso(lay, fp))
}

/// Coefficients (ascending from degree 0) of P(q) = Σ_L q^{cell_dim(L)}.
pub fn poincare(iso: &IsoClass, e: &DimVector) -> Vec<usize> {
    let lay = layout(iso);
    let mut coeffs = Vec::new();
    for fp in fixed_points(&lay, e) {
        let d = cell_dim(&lay, &fp);
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += 1;
    }
    coeffs
}

/// Euler characteristic = number of fixed points = P(1).
pub fn euler(iso: &IsoClass, e: &DimVector) -> usize {
    poincare(iso, e).iter().sum()
}

/// One isomorphism stratum of the quiver Grassmannian: fixed points grouped
/// by the iso class of their subrepresentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stratum {
    pub class: IsoClass,
    pub cell_count: usize,
    pub max_cell_dim: usize,
    /// dim Hom(N,M) − dim End(N), the closed-form stratum dimension.
    pub hom_dim_formula: usize,
}

/// Group the fixed points by subrepresentation iso class; for each stratum
/// the maximal cell dimension must match the hom-formula dimension.
pub fn strata(iso: &IsoClass, e: &DimVector) -> Result<Vec<Stratum>> {
    let lay = layout(iso);
    let mut groups: BTreeMap<IsoClass, (usize, usize)> = BTreeMap::new();
    for fp in fixed_points(&lay, e) {
        let cls = suffix_iso(&lay, &fp);
        let d = cell_dim(&lay, &fp);
        let entry = groups.entry(cls).or_insert((0, 0));
        entry.0 += 1;
        entry.1 = entry.1.max(d);
    }
    let mut out = Vec::new();
    for (class, (cell_count, max_cell_dim)) in groups {
        let formula = hom_dim(&class, iso) - end_dim(&class);
        debug_assert_eq!(formula, stratum_dim(&class, iso)?);
        out.push(Stratum {
            class,
            cell_count,
            max_cell_dim,
            hom_dim_formula: formula,
        });
    }
    Ok(out)
}

/// Fixed points attaining the maximal cell dimension.
pub fn top_cells(iso: &IsoClass, e: &DimVector) -> Vec<FixedPoint> {
    let lay = layout(iso);
    let fps = fixed_points(&lay, e);
    let max = fps.iter().map(|fp| cell_dim(&lay, fp)).max().unwrap_or(0);
    fps.into_iter()
        .filter(|fp| cell_dim(&lay, fp) == max)
        .collect()
}

/// Default node budget for the finite-field point count.
pub const DEFAULT_COUNT_BUDGET: u64 = 50_000_000;

/// Exact number of F_p-points of Gr_e(M): tuples (U_1, …, U_n) of subspaces
/// with dim U_i = e_i and f_i U_i ⊆ U_{i+1}, for the canonical representation
/// of the iso class over F_p. Enumerates subspaces level by level, pruning by
/// constructing U_{i+1} ⊇ f_i U_i only; the final level is counted by a
/// Gaussian binomial instead of being enumerated.
pub fn count_points_fq(iso: &IsoClass, e: &DimVector, p: u64, budget: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("{} is not prime", p)));
    }
    let n = iso.n;
    if e.d.len() != n {
        return Err(Error::LengthMismatch(format!(
            "dimension vector of length {} for n={}",
            e.d.len(),
            n
        )));
    }
    let dims = iso.dim_vector();
    for i in 0..n {
        if e.d[i] > dims.d[i] {
            return Err(Error::WrongDims(format!(
                "e_{} = {} exceeds ambient dimension {}",
                i + 1,
                e.d[i],
                dims.d[i]
            )));
        }
    }
    let rep = canonical_rep_fp(iso, p);
    let mut nodes: u64 = 0;
    let zero = Subspace::zero(dims.d[0], Fp { val: 0, p });
    count_rec(&rep, &e.d, 0, &zero, p, &mut nodes, budget)
}

fn count_rec(
    rep: &crate::core::MatrixRep<Fp>,
    e: &[usize],
    level: usize,
    forced: &Subspace<Fp>,
    p: u64,
    nodes: &mut u64,
    budget: u64,
) -> Result<u64> {
    let n = e.len();
    let ambient = rep.dims[level];
    let w = forced.dim();
    if e[level] < w {
        return Ok(0);
    }
    if level == n - 1 {
        return Ok(gaussian_binomial(ambient - w, e[level] - w, p));
    }
    let mut total = 0u64;
    for u in extensions(forced, e[level], p, nodes, budget)? {
        let img = u.image_under(&rep.maps[level]);
        total += count_rec(rep, e, level + 1, &img, p, nodes, budget)?;
    }
    Ok(total)
}

/// Number of k-dimensional subspaces of F_p^m.
fn gaussian_binomial(m: usize, k: usize, p: u64) -> u64 {
    if k > m {
        return 0;
    }
    // Π_{t=0}^{k−1} (p^{m−t} − 1) / (p^{k−t} − 1); computed iteratively in
    // exact integer arithmetic (the partial products are always integral
    // when multiplied before dividing in this order via num/den tracking)
    let mut num = 1u128;
    let mut den = 1u128;
    for t in 0..k {
        num *= (p as u128).pow((m - t) as u32) - 1;
        den *= (p as u128).pow((k - t) as u32) - 1;
    }
    u64::try_from(num / den).expect("Gaussian binomial overflows u64")
}

/// All subspaces of dimension `k` containing `w`, parameterized by reduced
/// row-echelon bases of the quotient by `w`.
fn extensions(
    w: &Subspace<Fp>,
    k: usize,
    p: u64,
    nodes: &mut u64,
    budget: u64,
) -> Result<Vec<Subspace<Fp>>> {
    let ambient = w.ambient;
    let wd = w.dim();
    debug_assert!(k >= wd);
    let proto = Fp { val: 0, p };
    // pivot columns of w's reduced basis
    let mut pivots = Vec::new();
    for r in 0..wd {
        let c = (0..ambient)
            .position(|j| !w.basis.get(r, j).is_zero())
            .expect("zero row in a reduced basis");
        pivots.push(c);
    }
    let free_cols: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
    let q = free_cols.len();
    let r = k - wd;
    let mut out = Vec::new();
    for mat in rref_matrices(r, q, p, nodes, budget)? {
        let mut vectors: Vec<Vec<Fp>> = (0..wd)
            .map(|row| {
                (0..ambient)
                    .map(|j| w.basis.get(row, j).clone())
                    .collect()
            })
            .collect();
        for row in &mat {
            let mut v = vec![proto.clone(); ambient];
            for (t, &c) in free_cols.iter().enumerate() {
                v[c] = Fp {
                    val: row[t] % p,
                    p,
                };
            }
            vectors.push(v);
        }
        let u = Subspace::from_vectors(ambient, &vectors, proto.clone());
        debug_assert_eq!(u.dim(), k);
        out.push(u);
    }
    Ok(out)
}

/// All r×q matrices over F_p in reduced row-echelon form with full row rank.
fn rref_matrices(
    r: usize,
    q: usize,
    p: u64,
    nodes: &mut u64,
    budget: u64,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let mut out = Vec::new();
    if r == 0 {
        *nodes += 1;
        out.push(Vec::new());
        return Ok(out);
    }
    if r > q {
        return Ok(out);
    }
    // choose pivot columns c_0 < … < c_{r−1}, then run an odometer over the
    // free entries (row t, non-pivot columns > c_t)
    let mut combo: Vec<usize> = (0..r).collect();
    loop {
        let mut free: Vec<(usize, usize)> = Vec::new();
        for t in 0..r {
            for c in combo[t] + 1..q {
                if !combo.contains(&c) {
                    free.push((t, c));
                }
            }
        }
        let mut vals = vec![0u64; free.len()];
        loop {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded(format!(
                    "finite-field subspace enumeration exceeded {} nodes",
                    budget
                )));
            }
            let mut m = vec![vec![0u64; q]; r];
            for t in 0..r {
                m[t][combo[t]] = 1;
            }
            for (idx, &(t, c)) in free.iter().enumerate() {
                m[t][c] = vals[idx];
            }
            out.push(m);
            // advance the odometer
            let mut pos = 0;
            while pos < vals.len() {
                vals[pos] += 1;
                if vals[pos] < p {
                    break;
                }
                vals[pos] = 0;
                pos += 1;
            }
            if pos == vals.len() {
                break;
            }
        }
        if !next_combination(&mut combo, q) {
            return Ok(out);
        }
    }
}

/// Advance a sorted r-subset of {0, …, q−1} to its lexicographic successor.
fn next_combination(combo: &mut [usize], q: usize) -> bool {
    let r = combo.len();
    let mut t = r;
    while t > 0 {
        t -= 1;
        if combo[t] < q - (r - t) {
            combo[t] += 1;
            for s in t + 1..r {
                combo[s] = combo[s - 1] + 1;
            }
            return true;
        }
    }
    false
}
