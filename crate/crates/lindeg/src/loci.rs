//! Locus classification of points in the base space of representations:
//! flat / irreducible / normal / PBW / generic, degeneration witnesses,
//! broken rhyme schemes, the flat-orbit census, transversal slices and the
//! unipotent group scheme acting on the PBW locus.

use crate::core::{
    iso_from_ranks, named_rep, ranks_from_iso, MatrixRep, NamedRep, RankTuple,
};
use crate::error::{Error, Result};
use crate::field::{rat, Scalar};
use crate::homalg::degenerates_to_ranks;
use crate::matrix::Mat;
use num_rational::BigRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Flat, not irreducible: vertex index i with r_{i,i+1} = n−1.
    Vertex(usize),
    /// Not flat: pair (i,j) with r_{i,j} ≤ n−j+i−1, minimal j−i then i.
    Pair(usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocusReport {
    pub flat: bool,
    pub irreducible: bool,
    pub normal: bool,
    pub pbw: bool,
    pub iso: bool,
    pub witness: Option<Witness>,
}

fn require_full_dims(rt: &RankTuple) -> Result<usize> {
    let n = rt.n;
    if rt.diag.iter().any(|&d| d != n + 1) {
        return Err(Error::WrongDims(format!(
            "expected diagonal ({},...), got {:?}",
            n + 1,
            rt.diag
        )));
    }
    Ok(n)
}

/// Classify a rank tuple with vertex dimensions (n+1,...,n+1) into the
/// locus hierarchy: generic ⊆ PBW ⊆ irreducible ⊆ flat, normal = flat ∧
/// irreducible. A degeneration witness is attached when the point is not
/// flat-irreducible.
pub fn classify(rt: &RankTuple) -> Result<LocusReport> {
    let n = require_full_dims(rt)?;
    iso_from_ranks(rt)?; // realizability
    let mut flat = true;
    let mut irreducible = true;
    let mut iso = true;
    let mut pbw = true;
    for i in 1..n {
        for j in i + 1..=n {
            let r = rt.get(i, j);
            if r < n - j + i {
                flat = false;
            }
            if r < n + 1 - j + i {
                irreducible = false;
            }
            if r != n + 1 {
                iso = false;
            }
            // coranks add along the path i → j
            let corank_sum: usize = (i..j).map(|k| n + 1 - rt.get(k, k + 1)).sum();
            if n + 1 - r != corank_sum {
                pbw = false;
            }
        }
    }
    irreducible &= flat;
    pbw &= irreducible;
    let normal = flat && irreducible;
    let witness = if normal { None } else { Some(find_witness(rt, flat)?) };
    Ok(LocusReport {
        flat,
        irreducible,
        normal,
        pbw,
        iso,
        witness,
    })
}

/// Degeneration witness for points outside the flat-irreducible locus.
pub fn witness(rt: &RankTuple) -> Result<Witness> {
    let report = classify(rt)?;
    match report.witness {
        Some(w) => Ok(w),
        None => Err(Error::NoWitness),
    }
}

fn find_witness(rt: &RankTuple, flat: bool) -> Result<Witness> {
    let n = rt.n;
    if flat {
        // not irreducible: some r_{i,i+1} = n−1; pick the smallest i and
        // confirm the point is a degeneration of M(a^i)
        for i in 1..n {
            if rt.get(i, i + 1) == n - 1 {
                let dom = ranks_from_iso(&named_rep(&NamedRep::Ai(i), n)?);
                if degenerates_to_ranks(&dom, rt)? {
                    return Ok(Witness::Vertex(i));
                }
                return Err(Error::NonRealizable(format!(
                    "flat non-irreducible point does not degenerate from the expected orbit at i={}",
                    i
                )));
            }
        }
        Err(Error::NonRealizable(
            "flat non-irreducible point without a corank-2 vertex map".into(),
        ))
    } else {
        // not flat: minimal window j−i, then smallest i, with r_{i,j} ≤ n−j+i−1
        for len in 1..n {
            for i in 1..=n - len {
                let j = i + len;
                if rt.get(i, j) + 1 <= n - j + i {
                    let dom = ranks_from_iso(&named_rep(&NamedRep::Aij(i, j - 1), n)?);
                    if degenerates_to_ranks(&dom, rt)? {
                        return Ok(Witness::Pair(i, j));
                    }
                    return Err(Error::NonRealizable(format!(
                        "non-flat point does not degenerate from the expected orbit at ({},{})",
                        i, j
                    )));
                }
            }
        }
        Err(Error::NonRealizable("non-flat point without a deep rank drop".into()))
    }
}

// ---------------------------------------------------------------------------
// Broken rhyme schemes

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RhymeScheme {
    pub b: Vec<usize>,
}

impl RhymeScheme {
    pub fn new(b: Vec<usize>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidScheme("scheme must be non-empty".into()));
        }
        if b[0] > 1 {
            return Err(Error::InvalidScheme(format!("b_1 = {} not in {{0,1}}", b[0])));
        }
        let mut max = b[0];
        for (idx, &v) in b.iter().enumerate().skip(1) {
            if v > max + 1 {
                return Err(Error::InvalidScheme(format!(
                    "b_{} = {} exceeds max+1 = {}",
                    idx + 1,
                    v,
                    max + 1
                )));
            }
            max = max.max(v);
        }
        Ok(RhymeScheme { b })
    }

    pub fn n(&self) -> usize {
        self.b.len() + 1
    }

    /// Regular: the nonzero values are pairwise distinct.
    pub fn is_regular(&self) -> bool {
        for (idx, &v) in self.b.iter().enumerate() {
            if v != 0 && self.b[..idx].contains(&v) {
                return false;
            }
        }
        true
    }
}

/// All broken rhyme schemes of length n−1, in lexicographic order.
pub fn rhyme_enumerate(n: usize) -> Vec<RhymeScheme> {
    assert!(n >= 2);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n - 1);
    fn rec(cur: &mut Vec<usize>, len: usize, out: &mut Vec<RhymeScheme>) {
        if cur.len() == len {
            out.push(RhymeScheme { b: cur.clone() });
            return;
        }
        let max = cur.iter().copied().max().unwrap_or(0);
        let hi = if cur.is_empty() { 1 } else { max + 1 };
        for v in 0..=hi {
            cur.push(v);
            rec(cur, len, out);
            cur.pop();
        }
    }
    rec(&mut cur, n - 1, &mut out);
    out
}

/// The orbit representative of a scheme: f_i is the identity when b_i = 0,
/// otherwise the coordinate projection killing v_{b_i}.
pub fn scheme_to_rep(b: &RhymeScheme) -> MatrixRep<BigRational> {
    let n = b.n();
    let mut maps = Vec::new();
    for &bi in &b.b {
        let mut m = Mat::identity(n + 1, rat(0));
        if bi != 0 {
            m.set(bi - 1, bi - 1, rat(0));
        }
        maps.push(m);
    }
    MatrixRep {
        dims: vec![n + 1; n],
        maps,
    }
}

/// Rank tuple of the scheme's orbit: r_{i,j} = n+1 − #{distinct nonzero
/// values among b_i,...,b_{j−1}}.
pub fn scheme_to_ranks(b: &RhymeScheme) -> RankTuple {
    let n = b.n();
    let r: Vec<Vec<usize>> = (1..n)
        .map(|i| {
            (i + 1..=n)
                .map(|j| {
                    let mut vals: Vec<usize> =
                        b.b[i - 1..j - 1].iter().copied().filter(|&v| v != 0).collect();
                    vals.sort_unstable();
                    vals.dedup();
                    n + 1 - vals.len()
                })
                .collect()
        })
        .collect();
    RankTuple {
        n,
        diag: vec![n + 1; n],
        r,
    }
}

/// Projection sequence of a regular scheme: the strictly increasing list
/// 𝐢 with b_{i_s} = s.
pub fn dseq_of_scheme(b: &RhymeScheme) -> Result<Vec<usize>> {
    if !b.is_regular() {
        return Err(Error::NotRegular(format!("{:?}", b.b)));
    }
    // the nonzero values of a regular scheme are 1,...,k in order of first
    // appearance, so b_{i_s} = s pins down the sequence
    let k = b.b.iter().filter(|&&v| v != 0).count();
    let mut seq = vec![0usize; k];
    for (idx, &v) in b.b.iter().enumerate() {
        if v != 0 {
            seq[v - 1] = idx + 1;
        }
    }
    Ok(seq)
}

/// Inverse of [`dseq_of_scheme`]: scheme of length n−1 with b_{i_s} = s.
pub fn scheme_of_dseq(seq: &[usize], n: usize) -> Result<RhymeScheme> {
    let mut b = vec![0usize; n - 1];
    for (s, &i) in seq.iter().enumerate() {
        if i < 1 || i > n - 1 || (s > 0 && seq[s - 1] >= i) {
            return Err(Error::InvalidParams(
                "projection sequence must be strictly increasing in [1,n-1]".into(),
            ));
        }
        b[i - 1] = s + 1;
    }
    RhymeScheme::new(b)
}

// ---------------------------------------------------------------------------
// Flat orbit census

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Census {
    /// Number of realizable rank tuples dominating r².
    pub rank_count: u64,
    /// Number of sequences (I_1,...,I_{n−1}) of subsets of {1..n+1} with
    /// |I_i| ≤ 2 and |I_i ∪ I_{i+1}| ≤ 3, modulo simultaneous relabelling.
    pub pcal_count: u64,
}

pub fn flat_orbit_census(n: usize) -> Census {
    Census {
        rank_count: count_rank_tuples_above(n, |i, j| n - (j - i)),
        pcal_count: count_subset_sequences(n),
    }
}

/// Count realizable rank tuples with diagonal (n+1,...) whose off-diagonal
/// entries satisfy r_{i,j} >= lower(i,j).
pub fn count_rank_tuples_above(n: usize, lower: impl Fn(usize, usize) -> usize) -> u64 {
    // DFS over windows ordered by length; monotonicity prunes, the full
    // validity check (m >= 0, four-point) runs on completed tuples.
    let mut cells = Vec::new();
    for len in 1..n {
        for i in 1..=n - len {
            cells.push((i, i + len));
        }
    }
    let mut rt = RankTuple {
        n,
        diag: vec![n + 1; n],
        r: (1..n).map(|i| vec![0; n - i]).collect(),
    };
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        rt: &mut RankTuple,
        n: usize,
        lower: &impl Fn(usize, usize) -> usize,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            if rt.validate().is_ok() {
                *count += 1;
            }
            return;
        }
        let (i, j) = cells[idx];
        let hi = rt.get(i, j - 1).min(rt.get(i + 1, j)).min(n + 1);
        let lo = lower(i, j);
        for v in lo..=hi {
            rt.r[i - 1][j - i - 1] = v;
            rec(cells, idx + 1, rt, n, lower, count);
        }
        rt.r[i - 1][j - i - 1] = 0;
    }
    let mut count = 0;
    rec(&cells, 0, &mut rt, n, &lower, &mut count);
    count
}

fn count_subset_sequences(n: usize) -> u64 {
    let v = n + 1;
    // subsets of {1..n+1} of size <= 2, as sorted vectors
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    for a in 1..=v {
        subsets.push(vec![a]);
    }
    for a in 1..=v {
        for b in a + 1..=v {
            subsets.push(vec![a, b]);
        }
    }
    let union_ok = |a: &Vec<usize>, b: &Vec<usize>| {
        let mut u = a.clone();
        u.extend(b.iter().copied());
        u.sort_unstable();
        u.dedup();
        u.len() <= 3
    };
    // all permutations of {1..n+1}
    let mut perms = vec![vec![]];
    for k in 1..=v {
        let mut next = Vec::new();
        for p in &perms {
            for pos in 0..=p.len() {
                let mut q: Vec<usize> = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        perms = next;
    }
    let relabel = |s: &Vec<usize>, p: &Vec<usize>| -> Vec<usize> {
        let mut t: Vec<usize> = s.iter().map(|&x| p[x - 1]).collect();
        t.sort_unstable();
        t
    };
    let mut canon_forms = std::collections::HashSet::new();
    let mut stack: Vec<Vec<Vec<usize>>> = subsets.iter().map(|s| vec![s.clone()]).collect();
    let mut count = 0u64;
    while let Some(seq) = stack.pop() {
        if seq.len() == n - 1 {
            // canonical form: lexicographic minimum over simultaneous relabelling
            let canon = perms
                .iter()
                .map(|p| seq.iter().map(|s| relabel(s, p)).collect::<Vec<_>>())
                .min()
                .unwrap();
            if canon_forms.insert(canon) {
                count += 1;
            }
            continue;
        }
        for s in &subsets {
            if union_ok(seq.last().unwrap(), s) {
                let mut next = seq.clone();
                next.push(s.clone());
                stack.push(next);
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Transversal slice and the group scheme on the PBW locus

/// Upper-triangular parameter pack λ_{i,j}, 1 ≤ i ≤ j ≤ n−1.
#[derive(Clone, Debug)]
pub struct SliceParams {
    pub n: usize,
    /// lam[i-1][j-i] = λ_{i,j}
    pub lam: Vec<Vec<BigRational>>,
}

impl SliceParams {
    pub fn zeros(n: usize) -> Self {
        SliceParams {
            n,
            lam: (1..n).map(|i| vec![rat(0); n - i]).collect(),
        }
    }
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.lam[i - 1][j - i]
    }
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.lam[i - 1][j - i] = v;
    }
    pub fn from_diag(n: usize, diag: &[BigRational]) -> Result<Self> {
        if diag.len() != n - 1 {
            return Err(Error::LengthMismatch(format!(
                "need {} diagonal values, got {}",
                n - 1,
                diag.len()
            )));
        }
        let mut p = SliceParams::zeros(n);
        for (i, v) in diag.iter().enumerate() {
            p.set(i + 1, i + 1, v.clone());
        }
        Ok(p)
    }
}

/// The transversal slice point: (f_i)_{p,q} = 1 if p = q ≠ i+1;
/// λ_{p−1,q−1} if 2 ≤ p ≤ i+1 ≤ q ≤ n; 0 otherwise (1-based entries).
pub fn slice_rep(params: &SliceParams) -> MatrixRep<BigRational> {
    let n = params.n;
    let mut maps = Vec::new();
    for i in 1..n {
        let mut m = Mat::zeros(n + 1, n + 1, rat(0));
        for p in 1..=n + 1 {
            for q in 1..=n + 1 {
                if p == q && p != i + 1 {
                    m.set(p - 1, q - 1, rat(1));
                } else if 2 <= p && p <= i + 1 && i + 1 <= q && q <= n {
                    m.set(p - 1, q - 1, params.get(p - 1, q - 1).clone());
                }
            }
        }
        maps.push(m);
    }
    MatrixRep {
        dims: vec![n + 1; n],
        maps,
    }
}

/// Slice point restricted to the PBW stratum: off-diagonal λ all zero.
pub fn slice_pbw(n: usize, diag: &[BigRational]) -> Result<MatrixRep<BigRational>> {
    Ok(slice_rep(&SliceParams::from_diag(n, diag)?))
}

/// Strictly-lower-triangular coordinates x_{p,q}, 1 ≤ q < p ≤ n+1.
#[derive(Clone, Debug)]
pub struct LowerParams {
    pub n: usize,
    /// x[p-2][q-1] = x_{p,q} for q < p
    pub x: Vec<Vec<BigRational>>,
}

impl LowerParams {
    pub fn zeros(n: usize) -> Self {
        LowerParams {
            n,
            x: (2..=n + 1).map(|p| vec![rat(0); p - 1]).collect(),
        }
    }
    pub fn get(&self, p: usize, q: usize) -> &BigRational {
        &self.x[p - 2][q - 1]
    }
    pub fn set(&mut self, p: usize, q: usize, v: BigRational) {
        self.x[p - 2][q - 1] = v;
    }
}

/// The unipotent group scheme over the PBW stratum: for a diagonal
/// parameter λ and lower coordinates x, the matrix g_i has entries
/// (1-based): 0 above the diagonal, 1 on it, and below the diagonal
/// λ_{q−1,q−1}·x_{p,q} if i < q, x_{p,q} if q ≤ i < p, λ_{p−1,p−1}·x_{p,q}
/// if p ≤ i.
pub fn gamma_pbw(n: usize, diag: &[BigRational], x: &LowerParams) -> Result<Vec<Mat<BigRational>>> {
    if diag.len() != n - 1 {
        return Err(Error::LengthMismatch(format!(
            "need {} diagonal values, got {}",
            n - 1,
            diag.len()
        )));
    }
    let mut out = Vec::new();
    for i in 1..=n {
        let mut g = Mat::identity(n + 1, rat(0));
        for p in 2..=n + 1 {
            for q in 1..p {
                let v = if i < q {
                    diag[q - 2].clone() * x.get(p, q)
                } else if q <= i && i < p {
                    x.get(p, q).clone()
                } else {
                    // q < p <= i
                    diag[p - 2].clone() * x.get(p, q)
                };
                g.set(p - 1, q - 1, v);
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// Verify that (g_1,...,g_n) is an automorphism of the representation
/// (f_1,...,f_{n−1}): g_{i+1} f_i = f_i g_i exactly.
pub fn check_automorphism(g: &[Mat<BigRational>], f: &MatrixRep<BigRational>) -> Result<bool> {
    let n = f.n();
    if g.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "need {} group elements, got {}",
            n,
            g.len()
        )));
    }
    for i in 0..n - 1 {
        let lhs = g[i + 1].mul(&f.maps[i]);
        let rhs = f.maps[i].mul(&g[i]);
        if !lhs.sub(&rhs).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every g_i preserves the standard flag ⟨v_1⟩ ⊂ ⟨v_1,v_2⟩ ⊂ ...,
/// i.e. all g_i are upper triangular w.r.t. the standard basis. Since the
/// g_i are lower unitriangular this forces g_i = id, so the group acts
/// with trivial stabilizer on the set of standard flags.
pub fn stabilizes_standard_flag(g: &[Mat<BigRational>]) -> bool {
    g.iter().all(|m| {
        for p in 0..m.rows {
            for q in 0..p {
                if !m.get(p, q).is_zero() {
                    return false;
                }
            }
        }
        true
    })
}

/// The explicit solvable group scheme over the full n=3 slice, reproducing
/// the three displayed matrices (entries depend on λ_{11}, λ_{12}, λ_{22}).
pub fn gamma_slice_n3(params: &SliceParams, x: &LowerParams) -> Result<Vec<Mat<BigRational>>> {
    if params.n != 3 || x.n != 3 {
        return Err(Error::InvalidParams("only defined for n = 3".into()));
    }
    let l11 = params.get(1, 1).clone();
    let l12 = params.get(1, 2).clone();
    let l22 = params.get(2, 2).clone();
    let two = rat(2);
    let xg = |p: usize, q: usize| x.get(p, q).clone();

    let mut g1 = Mat::identity(4, rat(0));
    g1.set(1, 0, xg(2, 1));
    g1.set(2, 0, xg(3, 1));
    g1.set(2, 1, l11.clone() * xg(3, 2));
    g1.set(2, 2, rat(1) + two.clone() * l12.clone() * xg(3, 2));
    g1.set(3, 0, xg(4, 1));
    g1.set(3, 1, l11.clone() * xg(4, 2));
    g1.set(3, 2, l22.clone() * xg(4, 3) + two.clone() * l12.clone() * xg(4, 2));

    let mut g2 = Mat::identity(4, rat(0));
    g2.set(1, 0, l11.clone() * xg(2, 1) + l12.clone() * xg(3, 1));
    g2.set(1, 1, rat(1) + l12.clone() * xg(3, 2));
    g2.set(1, 2, l12.clone() * l12.clone() * xg(3, 2));
    g2.set(2, 0, xg(3, 1));
    g2.set(2, 1, xg(3, 2));
    g2.set(2, 2, rat(1) + l12.clone() * xg(3, 2));
    g2.set(3, 0, xg(4, 1));
    g2.set(3, 1, xg(4, 2));
    g2.set(3, 2, l22.clone() * xg(4, 3) + l12.clone() * xg(4, 2));

    let mut g3 = Mat::identity(4, rat(0));
    g3.set(1, 0, l11.clone() * xg(2, 1) + two.clone() * l12.clone() * xg(3, 1));
    g3.set(1, 1, rat(1) + two * l12 * xg(3, 2));
    g3.set(2, 0, l22.clone() * xg(3, 1));
    g3.set(2, 1, l22 * xg(3, 2));
    g3.set(3, 0, xg(4, 1));
    g3.set(3, 1, xg(4, 2));
    g3.set(3, 2, xg(4, 3));

    Ok(vec![g1, g2, g3])
}
