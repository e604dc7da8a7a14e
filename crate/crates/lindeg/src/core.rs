//! Core data model for representations of the equioriented A_n quiver:
//! dimension vectors, tuples of exact matrices, rank tuples, isomorphism
//! classes (interval multiplicities), and the named special representations.

use crate::error::{Error, Result};
use crate::field::{rat, Fp, Scalar};
use crate::matrix::Mat;
use num_rational::BigRational;

/// Dimension vector (d_1,...,d_n) of vertex dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimVector {
    pub d: Vec<usize>,
}

impl DimVector {
    pub fn new(d: Vec<usize>) -> Self {
        assert!(!d.is_empty());
        DimVector { d }
    }
    pub fn n(&self) -> usize {
        self.d.len()
    }
    /// The main case of interest: all vertex dimensions equal to n+1.
    pub fn full(n: usize) -> Self {
        DimVector { d: vec![n + 1; n] }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

/// A point of the base space R: matrices f_1,...,f_{n-1}, map i of shape
/// dims[i+1] x dims[i], with exact entries.
#[derive(Clone, Debug)]
pub struct MatrixRep<S: Scalar> {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat<S>>,
}

impl<S: Scalar> MatrixRep<S> {
    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.maps.len() + 1 != n {
            return Err(Error::ShapeMismatch(format!(
                "expected {} maps, got {}",
                n - 1,
                self.maps.len()
            )));
        }
        for (i, m) in self.maps.iter().enumerate() {
            if m.rows != self.dims[i + 1] || m.cols != self.dims[i] {
                return Err(Error::ShapeMismatch(format!(
                    "map {} has shape {}x{}, expected {}x{}",
                    i + 1,
                    m.rows,
                    m.cols,
                    self.dims[i + 1],
                    self.dims[i]
                )));
            }
        }
        Ok(())
    }

    /// Composite f_{j-1} ∘ ... ∘ f_i (1-based vertex indices, i < j).
    pub fn composite(&self, i: usize, j: usize) -> Mat<S> {
        assert!(1 <= i && i < j && j <= self.n());
        let mut acc = self.maps[i - 1].clone();
        for k in i + 1..j {
            acc = self.maps[k - 1].mul(&acc);
        }
        acc
    }
}

/// The orbit invariant r_{i,j} = rank(f_{j-1} ∘ ... ∘ f_i), stored for
/// 1 <= i < j <= n, with diagonal r_{i,i} = d_i. Boundary conventions
/// r_{0,*} = r_{*,n+1} = 0 are baked into the accessor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankTuple {
    pub n: usize,
    pub diag: Vec<usize>,
    /// Row i (1-based) lists r_{i,i+1},...,r_{i,n}; rows for i = 1..n-1.
    pub r: Vec<Vec<usize>>,
}

impl RankTuple {
    pub fn new(diag: Vec<usize>, r: Vec<Vec<usize>>) -> Result<Self> {
        let n = diag.len();
        if r.len() + 1 != n && !(n == 1 && r.is_empty()) {
            return Err(Error::Malformed(format!(
                "rank tuple needs {} off-diagonal rows, got {}",
                n.saturating_sub(1),
                r.len()
            )));
        }
        for (idx, row) in r.iter().enumerate() {
            let i = idx + 1;
            if row.len() != n - i {
                return Err(Error::Malformed(format!(
                    "row {} must list r_{{{},{}}}..r_{{{},{}}}",
                    i,
                    i,
                    i + 1,
                    i,
                    n
                )));
            }
        }
        Ok(RankTuple { n, diag, r })
    }

    /// r_{i,j} for 0 <= i <= j <= n+1 with the boundary conventions.
    pub fn get(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == self.n + 1 {
            return 0;
        }
        assert!(1 <= i && i <= j && j <= self.n);
        if i == j {
            self.diag[i - 1]
        } else {
            self.r[i - 1][j - i - 1]
        }
    }

    /// Multiplicity m_{i,j} = r_{i,j} - r_{i,j+1} - r_{i-1,j} + r_{i-1,j+1},
    /// as a signed value (negative means the tuple is not realizable).
    pub fn mult(&self, i: usize, j: usize) -> i64 {
        self.get(i, j) as i64 + self.get(i - 1, j + 1) as i64
            - self.get(i, j + 1) as i64
            - self.get(i - 1, j) as i64
    }

    /// Check all rank-tuple invariants: monotonicity, realizability (all
    /// m_{i,j} >= 0) and the four-point inequality.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            for j in i..=n {
                if j < n && self.get(i, j) < self.get(i, j + 1) {
                    return Err(Error::NonRealizable(format!(
                        "r_{{{},{}}} < r_{{{},{}}}",
                        i, j, i, j + 1
                    )));
                }
                if i > 1 && self.get(i - 1, j) > self.get(i, j) {
                    return Err(Error::NonRealizable(format!(
                        "r_{{{},{}}} > r_{{{},{}}}",
                        i - 1,
                        j,
                        i,
                        j
                    )));
                }
                if self.mult(i, j) < 0 {
                    return Err(Error::NonRealizable(format!(
                        "m_{{{},{}}} = {} < 0",
                        i,
                        j,
                        self.mult(i, j)
                    )));
                }
            }
        }
        // four-point inequality r_{i,l} + r_{j,k} >= r_{i,k} + r_{j,l}, i<j<=k<l
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j..=n {
                    for l in k + 1..=n {
                        if self.get(i, l) + self.get(j, k) < self.get(i, k) + self.get(j, l) {
                            return Err(Error::NonRealizable(format!(
                                "four-point inequality fails at ({},{},{},{})",
                                i, j, k, l
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Componentwise domination r_{i,j}(self) >= r_{i,j}(other) on i<j.
    pub fn dominates(&self, other: &RankTuple) -> Result<bool> {
        if self.n != other.n || self.diag != other.diag {
            return Err(Error::DimMismatch(format!(
                "rank tuples with n={} vs n={}",
                self.n, other.n
            )));
        }
        for i in 1..self.n {
            for j in i + 1..=self.n {
                if self.get(i, j) < other.get(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Krull-Schmidt normal form: multiplicities m_{i,j} of the interval
/// indecomposables U_{i,j}, 1 <= i <= j <= n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct IsoClass {
    pub n: usize,
    /// m[i-1][j-i] = multiplicity of U_{i,j}.
    pub m: Vec<Vec<usize>>,
}

impl IsoClass {
    pub fn zero(n: usize) -> Self {
        IsoClass {
            n,
            m: (1..=n).map(|i| vec![0; n - i + 1]).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i <= j && j <= self.n);
        self.m[i - 1][j - i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        assert!(1 <= i && i <= j && j <= self.n);
        self.m[i - 1][j - i] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: usize) {
        self.m[i - 1][j - i] += v;
    }

    pub fn from_intervals(n: usize, intervals: &[(usize, usize)]) -> Self {
        let mut c = IsoClass::zero(n);
        for &(i, j) in intervals {
            c.add(i, j, 1);
        }
        c
    }

    /// Interval summands with multiplicity, ordered lexicographically.
    pub fn intervals(&self) -> Vec<((usize, usize), usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i..=self.n {
                let m = self.get(i, j);
                if m > 0 {
                    out.push(((i, j), m));
                }
            }
        }
        out
    }

    pub fn dim_vector(&self) -> DimVector {
        let mut d = vec![0usize; self.n];
        for ((i, j), m) in self.intervals() {
            for v in i..=j {
                d[v - 1] += m;
            }
        }
        DimVector::new(d)
    }

    pub fn total_dim(&self) -> usize {
        self.dim_vector().d.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.intervals().is_empty()
    }

    pub fn direct_sum(&self, other: &IsoClass) -> IsoClass {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for ((i, j), m) in other.intervals() {
            out.add(i, j, m);
        }
        out
    }

    /// The projective part (summands U_{i,n}) and the rest.
    pub fn split_projective(&self) -> (IsoClass, IsoClass) {
        let mut proj = IsoClass::zero(self.n);
        let mut rest = IsoClass::zero(self.n);
        for ((i, j), m) in self.intervals() {
            if j == self.n {
                proj.add(i, j, m);
            } else {
                rest.add(i, j, m);
            }
        }
        (proj, rest)
    }
}

/// Total degree used to order segments: deg U_{i,j} = j-i+1 + C(n+1,2) - C(j+1,2).
/// Lower degree comes first; this ordering puts kernel vectors below
/// non-kernel vectors in every column.
pub fn interval_degree(n: usize, i: usize, j: usize) -> usize {
    let c = |k: usize| k * (k.saturating_sub(1)) / 2;
    (j - i + 1) + c(n + 1) - c(j + 1)
}

/// Segment order of an IsoClass: intervals sorted by degree ascending,
/// identical intervals kept together.
pub fn segment_order(iso: &IsoClass) -> Vec<(usize, usize)> {
    let mut segs = Vec::new();
    for ((i, j), m) in iso.intervals() {
        for _ in 0..m {
            segs.push((i, j));
        }
    }
    segs.sort_by_key(|&(i, j)| (interval_degree(iso.n, i, j), i, j));
    segs
}

/// Exact rank tuple of a matrix representation via Gaussian elimination.
pub fn rank_tuple<S: Scalar>(rep: &MatrixRep<S>) -> Result<RankTuple> {
    rep.validate()?;
    let n = rep.n();
    let diag = rep.dims.clone();
    let mut r = Vec::new();
    for i in 1..n {
        // incremental composites: rank of f_{j-1} ... f_i for j = i+1..n
        let mut row = Vec::new();
        let mut acc = rep.maps[i - 1].clone();
        row.push(acc.rank());
        for j in i + 2..=n {
            acc = rep.maps[j - 2].mul(&acc);
            row.push(acc.rank());
        }
        r.push(row);
    }
    RankTuple::new(diag, r)
}

/// Multiplicities from ranks via m_{i,j} = r_{i,j} - r_{i,j+1} - r_{i-1,j} + r_{i-1,j+1}.
pub fn iso_from_ranks(rt: &RankTuple) -> Result<IsoClass> {
    let mut iso = IsoClass::zero(rt.n);
    for i in 1..=rt.n {
        for j in i..=rt.n {
            let m = rt.mult(i, j);
            if m < 0 {
                return Err(Error::NonRealizable(format!(
                    "m_{{{},{}}} = {} < 0",
                    i, j, m
                )));
            }
            iso.set(i, j, m as usize);
        }
    }
    Ok(iso)
}

/// Ranks from multiplicities: r_{i,j} = sum of m_{k,l} over k<=i<=j<=l.
pub fn ranks_from_iso(iso: &IsoClass) -> RankTuple {
    let n = iso.n;
    let count = |i: usize, j: usize| -> usize {
        let mut s = 0;
        for k in 1..=i {
            for l in j..=n {
                s += iso.get(k, l);
            }
        }
        s
    };
    let diag: Vec<usize> = (1..=n).map(|i| count(i, i)).collect();
    let r: Vec<Vec<usize>> = (1..n)
        .map(|i| (i + 1..=n).map(|j| count(i, j)).collect())
        .collect();
    RankTuple { n, diag, r }
}

/// 0/1 matrices realizing an IsoClass in the standard segment basis,
/// segments ordered by [`segment_order`].
pub fn canonical_rep_in<S: Scalar>(iso: &IsoClass, proto: S) -> MatrixRep<S> {
    let n = iso.n;
    let segs = segment_order(iso);
    // basis of column c: segments containing c, in segment order
    let col_basis: Vec<Vec<usize>> = (1..=n)
        .map(|c| {
            segs.iter()
                .enumerate()
                .filter(|(_, &(a, b))| a <= c && c <= b)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let dims: Vec<usize> = col_basis.iter().map(|b| b.len()).collect();
    let mut maps = Vec::new();
    for c in 1..n {
        let src = &col_basis[c - 1];
        let tgt = &col_basis[c];
        let mut m = Mat::zeros(tgt.len(), src.len(), proto.clone());
        for (jj, &seg) in src.iter().enumerate() {
            if let Some(ii) = tgt.iter().position(|&s| s == seg) {
                let one = proto.one();
                m.set(ii, jj, one);
            }
        }
        maps.push(m);
    }
    MatrixRep { dims, maps }
}

pub fn canonical_rep(iso: &IsoClass) -> MatrixRep<BigRational> {
    canonical_rep_in(iso, rat(0))
}

pub fn canonical_rep_fp(iso: &IsoClass, p: u64) -> MatrixRep<Fp> {
    canonical_rep_in(iso, Fp { val: 0, p })
}

/// Constructors for the special representations of vertex dimensions n+1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NamedRep {
    /// Generic: U_{1,n}^{n+1}.
    M0,
    /// A ⊕ A*: M(1,...,1).
    M1,
    /// A ⊕ S ⊕ A*/S: the maximally degenerate flat representation.
    M2,
    /// M(a) for a tuple a = (a_1,...,a_{n-1}) with sum <= n+1.
    Ma(Vec<usize>),
    /// M(a^i): a single 2 at position i.
    Ai(usize),
    /// M(a^{i,j}): 2,1,...,1,2 at positions i..j (3 at i when i = j).
    Aij(usize, usize),
    /// Sum of projectives/injectives attached to a strictly increasing
    /// projection sequence: P_1^{n+1-k} ⊕ ⊕_m (I_{i_m} ⊕ P_{i_m+1}).
    Mi(Vec<usize>),
}

pub fn named_rep(kind: &NamedRep, n: usize) -> Result<IsoClass> {
    if n < 1 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    match kind {
        NamedRep::M0 => Ok(named_ma(&vec![0; n - 1], n)?),
        NamedRep::M1 => Ok(named_ma(&vec![1; n - 1], n)?),
        NamedRep::M2 => {
            // m_{1,1} = m_{n,n} = 2; m_{1,i} = 1 for i > 1; m_{i,n} = 1 for i < n;
            // m_{i,i} = 1 for 1 < i < n. Each pair assigned once (m_{1,n} = 1).
            let mut iso = IsoClass::zero(n);
            iso.set(1, 1, 2);
            iso.set(n, n, 2);
            for i in 2..=n {
                iso.set(1, i, 1);
            }
            for i in 2..n {
                iso.set(i, n, 1);
            }
            for i in 2..n {
                iso.set(i, i, 1);
            }
            Ok(iso)
        }
        NamedRep::Ma(a) => named_ma(a, n),
        NamedRep::Ai(i) => {
            if !(1 <= *i && *i < n) {
                return Err(Error::InvalidParams(format!("a^i needs 1 <= i < n, got {}", i)));
            }
            let mut a = vec![0; n - 1];
            a[i - 1] = 2;
            named_ma(&a, n)
        }
        NamedRep::Aij(i, j) => {
            if !(1 <= *i && i <= j && *j < n) {
                return Err(Error::InvalidParams(format!(
                    "a^{{i,j}} needs 1 <= i <= j < n, got ({},{})",
                    i, j
                )));
            }
            let mut a = vec![0; n - 1];
            if i == j {
                a[i - 1] = 3;
            } else {
                a[i - 1] = 2;
                a[j - 1] = 2;
                for k in i + 1..*j {
                    a[k - 1] = 1;
                }
            }
            named_ma(&a, n)
        }
        NamedRep::Mi(seq) => {
            let k = seq.len();
            for (idx, &v) in seq.iter().enumerate() {
                if v < 1 || v > n - 1 || (idx > 0 && seq[idx - 1] >= v) {
                    return Err(Error::InvalidParams(format!(
                        "projection sequence must be strictly increasing in [1,{}]",
                        n - 1
                    )));
                }
            }
            if k > n {
                return Err(Error::InvalidParams("sequence too long".into()));
            }
            let mut iso = IsoClass::zero(n);
            iso.add(1, n, n + 1 - k); // P_1^{n+1-k}
            for &i in seq {
                iso.add(1, i, 1); // I_i
                iso.add(i + 1, n, 1); // P_{i+1}
            }
            Ok(iso)
        }
    }
}

fn named_ma(a: &[usize], n: usize) -> Result<IsoClass> {
    if a.len() != n - 1 {
        return Err(Error::InvalidParams(format!(
            "a must have length {}, got {}",
            n - 1,
            a.len()
        )));
    }
    let s: usize = a.iter().sum();
    if s > n + 1 {
        return Err(Error::InvalidParams(format!(
            "sum of a = {} exceeds n+1 = {}",
            s,
            n + 1
        )));
    }
    // m_{1,n} = n+1 - sum a_i; m_{1,i} = a_i for i < n; m_{i,n} = a_{i-1} for i > 1.
    let mut iso = IsoClass::zero(n);
    iso.set(1, n, n + 1 - s);
    for i in 1..n {
        iso.add(1, i, a[i - 1]);
    }
    for i in 2..=n {
        iso.add(i, n, a[i - 2]);
    }
    Ok(iso)
}

/// Reference rank tuples on vertex dimensions (n+1,...): the generic r^0,
/// the minimal flat-irreducible r^1 and the minimal flat r^2.
pub fn r0(n: usize) -> RankTuple {
    standard_ranks(n, |_i, _j| n + 1)
}
pub fn r1(n: usize) -> RankTuple {
    standard_ranks(n, |i, j| n + 1 - j + i)
}
pub fn r2(n: usize) -> RankTuple {
    standard_ranks(n, |i, j| n - j + i)
}

pub fn standard_ranks(n: usize, f: impl Fn(usize, usize) -> usize) -> RankTuple {
    RankTuple {
        n,
        diag: vec![n + 1; n],
        r: (1..n)
            .map(|i| (i + 1..=n).map(|j| f(i, j)).collect())
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// JSON (all exact; matrix entries as decimal integer strings or "a/b")

pub mod json {
    use super::*;
    use num_bigint::BigInt;
    use serde_json::{json, Map, Value};
    use std::str::FromStr;

    pub fn rank_tuple_to_json(rt: &RankTuple) -> Value {
        let mut obj = Map::new();
        obj.insert("diag".into(), json!(rt.diag));
        obj.insert("n".into(), json!(rt.n));
        obj.insert("r".into(), json!(rt.r));
        Value::Object(obj)
    }

    pub fn rank_tuple_from_json(v: &Value) -> Result<RankTuple> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Malformed("missing n".into()))? as usize;
        let diag: Vec<usize> = parse_usize_list(&v["diag"])?;
        if diag.len() != n {
            return Err(Error::Malformed("diag length != n".into()));
        }
        let rows = v["r"]
            .as_array()
            .ok_or_else(|| Error::Malformed("missing r".into()))?;
        let mut r = Vec::new();
        for row in rows {
            r.push(parse_usize_list(row)?);
        }
        RankTuple::new(diag, r)
    }

    pub fn iso_to_json(iso: &IsoClass) -> Value {
        let mut m = Vec::new();
        for ((i, j), mult) in iso.intervals() {
            let mut e = Map::new();
            e.insert("i".into(), json!(i));
            e.insert("j".into(), json!(j));
            e.insert("mult".into(), json!(mult));
            m.push(Value::Object(e));
        }
        let mut obj = Map::new();
        obj.insert("m".into(), Value::Array(m));
        obj.insert("n".into(), json!(iso.n));
        Value::Object(obj)
    }

    pub fn iso_from_json(v: &Value) -> Result<IsoClass> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Malformed("missing n".into()))? as usize;
        let mut iso = IsoClass::zero(n);
        let list = v["m"]
            .as_array()
            .ok_or_else(|| Error::Malformed("missing m".into()))?;
        for e in list {
            let i = e["i"].as_u64().ok_or_else(|| Error::Malformed("bad i".into()))? as usize;
            let j = e["j"].as_u64().ok_or_else(|| Error::Malformed("bad j".into()))? as usize;
            let mult =
                e["mult"].as_u64().ok_or_else(|| Error::Malformed("bad mult".into()))? as usize;
            if !(1 <= i && i <= j && j <= n) {
                return Err(Error::Malformed(format!("interval ({},{}) out of range", i, j)));
            }
            iso.add(i, j, mult);
        }
        Ok(iso)
    }

    fn parse_usize_list(v: &Value) -> Result<Vec<usize>> {
        v.as_array()
            .ok_or_else(|| Error::Malformed("expected array".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| Error::Malformed("expected non-negative integer".into()))
            })
            .collect()
    }

    fn rational_to_string(x: &BigRational) -> String {
        if x.denom() == &BigInt::from(1) {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }

    fn rational_from_str(s: &str) -> Result<BigRational> {
        if let Some((a, b)) = s.split_once('/') {
            let num = BigInt::from_str(a.trim()).map_err(|e| Error::Malformed(e.to_string()))?;
            let den = BigInt::from_str(b.trim()).map_err(|e| Error::Malformed(e.to_string()))?;
            if den == BigInt::from(0) {
                return Err(Error::Malformed("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        } else {
            let num = BigInt::from_str(s.trim()).map_err(|e| Error::Malformed(e.to_string()))?;
            Ok(BigRational::from_integer(num))
        }
    }

    pub fn matrix_rep_to_json(rep: &MatrixRep<BigRational>) -> Value {
        rep_json_generic(rep, "Q".into(), rational_to_string)
    }

    pub fn matrix_rep_fp_to_json(rep: &MatrixRep<Fp>, p: u64) -> Value {
        rep_json_generic(rep, format!("Fp:{}", p), |x: &Fp| x.val.to_string())
    }

    fn rep_json_generic<S: Scalar>(
        rep: &MatrixRep<S>,
        field: String,
        fmt: impl Fn(&S) -> String,
    ) -> Value {
        let maps: Vec<Value> = rep
            .maps
            .iter()
            .map(|m| {
                let rows: Vec<Value> = (0..m.rows)
                    .map(|i| {
                        let row: Vec<Value> =
                            (0..m.cols).map(|j| Value::String(fmt(m.get(i, j)))).collect();
                        Value::Array(row)
                    })
                    .collect();
                Value::Array(rows)
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("dims".into(), json!(rep.dims));
        obj.insert("field".into(), Value::String(field));
        obj.insert("maps".into(), Value::Array(maps));
        obj.insert("n".into(), json!(rep.n()));
        Value::Object(obj)
    }

    pub enum AnyRep {
        Q(MatrixRep<BigRational>),
        Fp(u64, MatrixRep<Fp>),
    }

    pub fn matrix_rep_from_json(v: &Value) -> Result<AnyRep> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Malformed("missing n".into()))? as usize;
        let dims: Vec<usize> = parse_usize_list(&v["dims"])?;
        if dims.len() != n {
            return Err(Error::Malformed("dims length != n".into()));
        }
        let field = v["field"]
            .as_str()
            .ok_or_else(|| Error::Malformed("missing field".into()))?;
        let maps = v["maps"]
            .as_array()
            .ok_or_else(|| Error::Malformed("missing maps".into()))?;
        let entry_strings: Vec<Vec<Vec<String>>> = maps
            .iter()
            .map(|m| -> Result<Vec<Vec<String>>> {
                m.as_array()
                    .ok_or_else(|| Error::Malformed("map must be array of rows".into()))?
                    .iter()
                    .map(|row| -> Result<Vec<String>> {
                        row.as_array()
                            .ok_or_else(|| Error::Malformed("row must be array".into()))?
                            .iter()
                            .map(|e| match e {
                                Value::String(s) => Ok(s.clone()),
                                Value::Number(x) => Ok(x.to_string()),
                                _ => Err(Error::Malformed("entry must be string or int".into())),
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if field == "Q" {
            let maps: Vec<Mat<BigRational>> = entry_strings
                .iter()
                .map(|m| -> Result<Mat<BigRational>> {
                    let rows: Vec<Vec<BigRational>> = m
                        .iter()
                        .map(|row| row.iter().map(|s| rational_from_str(s)).collect())
                        .collect::<Result<_>>()?;
                    Ok(Mat::from_rows(rows, rat(0)))
                })
                .collect::<Result<_>>()?;
            let rep = MatrixRep { dims, maps };
            rep.validate()?;
            Ok(AnyRep::Q(rep))
        } else if let Some(ps) = field.strip_prefix("Fp:") {
            let p: u64 = ps
                .parse()
                .map_err(|_| Error::Malformed("bad prime in field tag".into()))?;
            if p < 2 || !is_prime(p) {
                return Err(Error::Malformed(format!("{} is not prime", p)));
            }
            let maps: Vec<Mat<Fp>> = entry_strings
                .iter()
                .map(|m| -> Result<Mat<Fp>> {
                    let rows: Vec<Vec<Fp>> = m
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|s| {
                                    s.parse::<i64>()
                                        .map(|v| Fp::new(v, p))
                                        .map_err(|e| Error::Malformed(e.to_string()))
                                })
                                .collect()
                        })
                        .collect::<Result<_>>()?;
                    Ok(Mat::from_rows(rows, Fp { val: 0, p }))
                })
                .collect::<Result<_>>()?;
            let rep = MatrixRep { dims, maps };
            rep.validate()?;
            Ok(AnyRep::Fp(p, rep))
        } else {
            Err(Error::Malformed(format!("unknown field tag {:?}", field)))
        }
    }

    pub fn is_prime(p: u64) -> bool {
        if p < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }
}
