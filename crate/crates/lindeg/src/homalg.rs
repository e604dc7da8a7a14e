//! Homological algebra for interval representations: Euler form, Hom/Ext
//! dimensions, degeneration order, embeddings and the stratification of the
//! flag-type quiver Grassmannian.

use crate::core::{
    iso_from_ranks, ranks_from_iso, segment_order, DimVector, IsoClass, MatrixRep, RankTuple,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Mat;

/// Euler form ⟨d,e⟩ = Σ d_i e_i − Σ d_i e_{i+1}.
pub fn euler_form(d: &DimVector, e: &DimVector) -> Result<i64> {
    if d.n() != e.n() {
        return Err(Error::LengthMismatch(format!(
            "dim vectors of length {} and {}",
            d.n(),
            e.n()
        )));
    }
    let n = d.n();
    let mut s: i64 = 0;
    for i in 0..n {
        s += d.d[i] as i64 * e.d[i] as i64;
    }
    for i in 0..n - 1 {
        s -= d.d[i] as i64 * e.d[i + 1] as i64;
    }
    Ok(s)
}

/// dim Hom(U_{i,j}, U_{k,l}) ∈ {0,1}: nonzero iff k ≤ i ≤ l ≤ j.
pub fn hom_indec(i: usize, j: usize, k: usize, l: usize) -> usize {
    usize::from(k <= i && i <= l && l <= j)
}

/// dim Ext¹(U_{k,l}, U_{i,j}) ∈ {0,1}: nonzero iff k+1 ≤ i ≤ l+1 ≤ j.
pub fn ext_indec(k: usize, l: usize, i: usize, j: usize) -> usize {
    usize::from(k + 1 <= i && i <= l + 1 && l + 1 <= j)
}

/// dim Hom(a, b), bilinear over the interval decompositions.
pub fn hom_dim(a: &IsoClass, b: &IsoClass) -> usize {
    let mut s = 0;
    for ((i, j), ma) in a.intervals() {
        for ((k, l), mb) in b.intervals() {
            s += ma * mb * hom_indec(i, j, k, l);
        }
    }
    s
}

/// dim Ext¹(a, b), bilinear over the interval decompositions.
pub fn ext_dim(a: &IsoClass, b: &IsoClass) -> usize {
    let mut s = 0;
    for ((k, l), ma) in a.intervals() {
        for ((i, j), mb) in b.intervals() {
            s += ma * mb * ext_indec(k, l, i, j);
        }
    }
    s
}

pub fn end_dim(a: &IsoClass) -> usize {
    hom_dim(a, a)
}

/// Independent Hom oracle: the dimension of the space of intertwiners
/// (φ_i) with φ_{i+1} f_i = g_i φ_i, computed by exact linear algebra.
pub fn hom_dim_oracle<S: Scalar>(a: &MatrixRep<S>, b: &MatrixRep<S>) -> Result<usize> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch("quivers of different length".into()));
    }
    let n = a.n();
    let proto = a
        .maps
        .first()
        .map(|m| m.proto().clone())
        .unwrap_or_else(|| b.maps[0].proto().clone());
    // unknowns: entries of φ_i (shape b.dims[i] x a.dims[i]), flattened row-major
    let mut offs = vec![0usize];
    for i in 0..n {
        offs.push(offs[i] + b.dims[i] * a.dims[i]);
    }
    let unknowns = offs[n];
    let mut rows: Vec<Vec<S>> = Vec::new();
    let zero = proto.zero();
    for i in 0..n - 1 {
        let f = &a.maps[i]; // a.dims[i+1] x a.dims[i]
        let g = &b.maps[i]; // b.dims[i+1] x b.dims[i]
        // equation (p,q): Σ_s φ_{i+1}[p,s] f[s,q] − Σ_t g[p,t] φ_i[t,q] = 0
        for p in 0..b.dims[i + 1] {
            for q in 0..a.dims[i] {
                let mut row = vec![zero.clone(); unknowns];
                for s in 0..a.dims[i + 1] {
                    let idx = offs[i + 1] + p * a.dims[i + 1] + s;
                    row[idx] = row[idx].add(f.get(s, q));
                }
                for t in 0..b.dims[i] {
                    let idx = offs[i] + t * a.dims[i] + q;
                    row[idx] = row[idx].sub(g.get(p, t));
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(unknowns);
    }
    let m = Mat::from_rows(rows, proto);
    Ok(unknowns - m.rank())
}

/// Degeneration order via rank domination: M degenerates to N iff
/// r_{i,j}(M) ≥ r_{i,j}(N) for all i < j (same dimension vector).
pub fn degenerates_to_ranks(m: &RankTuple, n: &RankTuple) -> Result<bool> {
    m.dominates(n)
}

/// Degeneration order via Hom: M ≤deg N iff dim Hom(U, M) ≤ dim Hom(U, N)
/// for every interval U.
pub fn degenerates_to_hom(m: &IsoClass, n: &IsoClass) -> Result<bool> {
    if m.n != n.n || m.dim_vector() != n.dim_vector() {
        return Err(Error::DimMismatch("iso classes differ in dimensions".into()));
    }
    for i in 1..=m.n {
        for j in i..=m.n {
            let u = IsoClass::from_intervals(m.n, &[(i, j)]);
            if hom_dim(&u, m) > hom_dim(&u, n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn degenerates_to(m: &IsoClass, n: &IsoClass) -> Result<bool> {
    degenerates_to_ranks(&ranks_from_iso(m), &ranks_from_iso(n))
}

/// Whether N admits an embedding into M, decided by coordinate
/// subrepresentations: each segment (a,b) of M contributes at most one
/// suffix interval (s,b) with a ≤ s. Grouping by right endpoint reduces
/// the search to a greedy interval matching.
pub fn embeds(n_cls: &IsoClass, m_cls: &IsoClass) -> Result<bool> {
    if n_cls.n != m_cls.n {
        return Err(Error::DimMismatch("iso classes with different n".into()));
    }
    let n = n_cls.n;
    for j in 1..=n {
        // demands: left endpoints i of summands U_{i,j} of N, ascending
        let mut demands = Vec::new();
        for i in 1..=j {
            for _ in 0..n_cls.get(i, j) {
                demands.push(i);
            }
        }
        // supplies: left endpoints a of summands U_{a,j} of M, ascending
        let mut supplies = Vec::new();
        for a in 1..=j {
            for _ in 0..m_cls.get(a, j) {
                supplies.push(a);
            }
        }
        // each demand i needs an unused supply a ≤ i; take the smallest
        let mut next = 0;
        for &i in &demands {
            if next >= supplies.len() || supplies[next] > i {
                return Ok(false);
            }
            next += 1;
        }
    }
    Ok(true)
}

/// Second embedding algorithm: split N = N_P ⊕ N̄ and M = P ⊕ X with the
/// full projective parts; N embeds iff N̄ embeds into X and
/// dim N − dim N̄ ≤ dim P componentwise.
pub fn embeds_via_projective_split(n_cls: &IsoClass, m_cls: &IsoClass) -> Result<bool> {
    if n_cls.n != m_cls.n {
        return Err(Error::DimMismatch("iso classes with different n".into()));
    }
    let (np, nbar) = n_cls.split_projective();
    let (p, x) = m_cls.split_projective();
    let dnp = np.dim_vector();
    let dp = p.dim_vector();
    for i in 0..n_cls.n {
        if dnp.d[i] > dp.d[i] {
            return Ok(false);
        }
    }
    embeds(&nbar, &x)
}

/// Dimension of the stratum of subrepresentations isomorphic to N inside
/// the quiver Grassmannian of M: dim Hom(N,M) − dim End(N).
pub fn stratum_dim(n_cls: &IsoClass, m_cls: &IsoClass) -> Result<usize> {
    if !embeds(n_cls, m_cls)? {
        return Err(Error::EmptyStratum(format!(
            "no embedding of the given class into the ambient representation"
        )));
    }
    Ok(hom_dim(n_cls, m_cls) - end_dim(n_cls))
}

/// Result of the irreducible-component analysis of the flag-type quiver
/// Grassmannian Gr_e(M) with e = (1,...,n) and vertex dimensions n+1.
#[derive(Clone, Debug)]
pub struct FlagComponents {
    /// True iff the Grassmannian has the minimal possible dimension n(n+1)/2.
    pub min_dim: bool,
    /// Subrepresentation classes N = N_P ⊕ N̄ whose stratum closures are the
    /// irreducible components (only meaningful when `min_dim`).
    pub components: Vec<IsoClass>,
}

/// All iso classes without projective summands whose dimension vector is
/// bounded by `bound`, lexicographically ordered.
fn enumerate_nonprojective_bounded(n: usize, bound: &[usize]) -> Vec<IsoClass> {
    let mut intervals = Vec::new();
    for i in 1..=n {
        for j in i..n {
            intervals.push((i, j));
        }
    }
    let mut out = Vec::new();
    let mut cur = IsoClass::zero(n);
    let mut used = vec![0usize; n];
    fn rec(
        intervals: &[(usize, usize)],
        idx: usize,
        cur: &mut IsoClass,
        used: &mut Vec<usize>,
        bound: &[usize],
        out: &mut Vec<IsoClass>,
    ) {
        if idx == intervals.len() {
            out.push(cur.clone());
            return;
        }
        let (i, j) = intervals[idx];
        let cap = (i..=j).map(|v| bound[v - 1] - used[v - 1]).min().unwrap();
        for m in 0..=cap {
            if m > 0 {
                for v in i..=j {
                    used[v - 1] += 1;
                }
                cur.add(i, j, 1);
            }
            rec(intervals, idx + 1, cur, used, bound, out);
        }
        // undo
        let m = cur.get(i, j);
        cur.set(i, j, 0);
        for v in i..=j {
            used[v - 1] -= m;
        }
    }
    rec(&intervals, 0, &mut cur, &mut used, bound, &mut out);
    out
}

/// Decide minimality of dim Gr_e(M) for e = (1,...,n), d = (n+1,...,n+1),
/// and list the strata achieving dimension n(n+1)/2.
pub fn flag_components(m_cls: &IsoClass) -> Result<FlagComponents> {
    let n = m_cls.n;
    let dv = m_cls.dim_vector();
    if dv.d.iter().any(|&d| d != n + 1) {
        return Err(Error::WrongDims(format!(
            "expected vertex dimensions {}, got {:?}",
            n + 1,
            dv.d
        )));
    }
    let (p, x) = m_cls.split_projective();
    let dp = p.dim_vector();
    let dx = x.dim_vector();
    // A* = ⊕ I_i = ⊕ U_{1,i}
    let astar = IsoClass::from_intervals(n, &(1..=n).map(|i| (1, i)).collect::<Vec<_>>());
    let e: Vec<usize> = (1..=n).collect();

    let mut min_dim = true;
    let mut components = Vec::new();
    for nbar in enumerate_nonprojective_bounded(n, &dx.d) {
        let dnbar = nbar.dim_vector();
        // c = e − dim N̄ must be the dim vector of a projective embedding into P
        let mut c = vec![0i64; n];
        let mut ok = true;
        for i in 0..n {
            c[i] = e[i] as i64 - dnbar.d[i] as i64;
            if c[i] < 0 || c[i] > dp.d[i] as i64 {
                ok = false;
                break;
            }
            if i > 0 && c[i] < c[i - 1] {
                ok = false;
                break;
            }
        }
        if !ok || !embeds(&nbar, &x)? {
            continue;
        }
        let lhs = end_dim(&nbar) as i64;
        let rhs = hom_dim(&nbar, &x) as i64 - hom_dim(&nbar, &astar) as i64;
        if lhs < rhs {
            min_dim = false;
        } else if lhs == rhs {
            // N_P has multiplicity c_i − c_{i-1} of P_i
            let mut full = nbar.clone();
            for i in 1..=n {
                let prev = if i == 1 { 0 } else { c[i - 2] };
                let a = (c[i - 1] - prev) as usize;
                if a > 0 {
                    full.add(i, n, a);
                }
            }
            components.push(full);
        }
    }
    if !min_dim {
        components.clear();
    }
    components.sort();
    Ok(FlagComponents { min_dim, components })
}

/// Interval class of a single coordinate-subrepresentation fixed point of
/// the canonical representation: suffix starts per segment (0 = empty).
pub fn suffix_class(m_cls: &IsoClass, starts: &[usize]) -> Result<IsoClass> {
    let segs = segment_order(m_cls);
    if segs.len() != starts.len() {
        return Err(Error::LengthMismatch(format!(
            "{} segments but {} suffix starts",
            segs.len(),
            starts.len()
        )));
    }
    let mut cls = IsoClass::zero(m_cls.n);
    for (&(a, b), &s) in segs.iter().zip(starts) {
        if s == 0 {
            continue;
        }
        if s < a || s > b {
            return Err(Error::InvalidParams(format!(
                "suffix start {} outside segment [{},{}]",
                s, a, b
            )));
        }
        cls.add(s, b, 1);
    }
    Ok(cls)
}

/// Convenience: ranks → iso, then iso-level degeneration test.
pub fn degenerates_to_any(m: &RankTuple, n: &RankTuple) -> Result<bool> {
    // validate realizability on both sides first
    iso_from_ranks(m)?;
    iso_from_ranks(n)?;
    degenerates_to_ranks(m, n)
}
