//! Schubert realization of PBW-type linear degenerations: projection
//! sequences, the associated Weyl group elements and their permutation and
//! root-set identities, degree tables and the partially abelianized bracket,
//! and exact Weyl/Demazure dimension computations.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A projection sequence: strictly increasing indices i_1 < … < i_k in
/// [1, n−1] marking the arrows degenerated to projections.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProjSeq {
    pub n: usize,
    pub seq: Vec<usize>,
}

impl ProjSeq {
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        for w in seq.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidParams(format!(
                    "projection sequence not strictly increasing: {:?}",
                    seq
                )));
            }
        }
        if seq.iter().any(|&i| i < 1 || i > n.saturating_sub(1)) {
            return Err(Error::InvalidParams(format!(
                "projection indices must lie in [1, {}]",
                n - 1
            )));
        }
        Ok(ProjSeq { n, seq })
    }

    /// Number of degenerated arrows d(𝐢).
    pub fn d(&self) -> usize {
        self.seq.len()
    }

    /// Rank parameter of the ambient special linear algebra, n+1+d(𝐢).
    pub fn rank(&self) -> usize {
        self.n + 1 + self.d()
    }
}

/// h_s = #{t : i_t < s} for s = 1, …, n.
pub fn h_vector(i: &ProjSeq) -> Vec<usize> {
    (1..=i.n)
        .map(|s| i.seq.iter().filter(|&&t| t < s).count())
        .collect()
}

/// ℓ_j = h_j + j; strictly increasing with steps in {1, 2}.
pub fn ell_vector(i: &ProjSeq) -> Vec<usize> {
    h_vector(i)
        .iter()
        .enumerate()
        .map(|(idx, &h)| h + idx + 1)
        .collect()
}

/// A Weyl group element of the symmetric group on {1, …, rank}, recorded as
/// a word in simple reflections together with the resulting permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylWord {
    pub rank: usize,
    /// Simple-reflection indices; the rightmost letter acts first.
    pub word: Vec<usize>,
    /// One-line notation: perm[r−1] = w(r).
    pub perm: Vec<usize>,
}

impl WeylWord {
    pub fn from_word(rank: usize, word: Vec<usize>) -> Result<Self> {
        if word.iter().any(|&a| a < 1 || a >= rank) {
            return Err(Error::InvalidParams(format!(
                "letter out of range for rank {}",
                rank
            )));
        }
        // build w = s_{a_1} ∘ … ∘ s_{a_L} with the rightmost letter acting
        // first: prepending s_a to the already-applied tail swaps the values
        // a, a+1 in the one-line notation
        let mut perm: Vec<usize> = (1..=rank).collect();
        for &a in word.iter().rev() {
            for v in perm.iter_mut() {
                if *v == a {
                    *v = a + 1;
                } else if *v == a + 1 {
                    *v = a;
                }
            }
        }
        Ok(WeylWord { rank, word, perm })
    }

    pub fn apply(&self, r: usize) -> usize {
        self.perm[r - 1]
    }

    pub fn inversions(&self) -> usize {
        let mut inv = 0;
        for a in 0..self.rank {
            for b in a + 1..self.rank {
                if self.perm[a] > self.perm[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn is_reduced(&self) -> bool {
        self.word.len() == self.inversions()
    }
}

/// w_𝐢 = w_n w_{n−1} ⋯ w_1 with w_k = s_{h_k+1} s_{h_k+2} ⋯ s_{h_k+k},
/// an element of the symmetric group on {1, …, n+1+d(𝐢)}.
pub fn weyl_word(i: &ProjSeq) -> WeylWord {
    let h = h_vector(i);
    let mut word = Vec::new();
    for k in (1..=i.n).rev() {
        for a in h[k - 1] + 1..=h[k - 1] + k {
            word.push(a);
        }
    }
    WeylWord::from_word(i.rank(), word).expect("generated letters are in range")
}

/// Check the explicit action of w_𝐢 on the marked positions ℓ_j:
/// a single step ℓ_j = ℓ_{j−1}+1 forces w(ℓ_j) = h_j + n − j + 2, a double
/// step forces w(ℓ_j − 1) = h_j and w(ℓ_j) = h_j + n + 1.
pub fn action_identities_hold(i: &ProjSeq) -> bool {
    let w = weyl_word(i);
    let h = h_vector(i);
    let ell = ell_vector(i);
    let n = i.n;
    for j in 1..=n {
        let prev = if j == 1 { 0 } else { ell[j - 2] };
        if ell[j - 1] == prev + 1 {
            if w.apply(ell[j - 1]) != h[j - 1] + n - j + 2 {
                return false;
            }
        } else {
            if w.apply(ell[j - 1] - 1) != h[j - 1] {
                return false;
            }
            if w.apply(ell[j - 1]) != h[j - 1] + n + 1 {
                return false;
            }
        }
    }
    true
}

/// Check the Schubert window condition: the image of {1, …, ℓ_j} under w_𝐢
/// is {1, …, ℓ_j − j} together with the j-element block ending at h_j+n+1.
pub fn window_condition_holds(i: &ProjSeq) -> bool {
    let w = weyl_word(i);
    let h = h_vector(i);
    let ell = ell_vector(i);
    let n = i.n;
    for j in 1..=n {
        let mut image: Vec<usize> = (1..=ell[j - 1]).map(|r| w.apply(r)).collect();
        image.sort_unstable();
        let mut expect: Vec<usize> = (1..=ell[j - 1] - j).collect();
        expect.extend(h[j - 1] + n - j + 2..=h[j - 1] + n + 1);
        if image != expect {
            return false;
        }
    }
    true
}

/// The negative roots sent to positive ones by w_𝐢, as pairs (a,b) encoding
/// −α_{a,b}; asserts the identity with {−α_{ℓ_p,ℓ_q} : 1 ≤ p ≤ q ≤ n}.
pub fn inversion_negative_roots(i: &ProjSeq) -> Vec<(usize, usize)> {
    let w = weyl_word(i);
    let rank = w.rank;
    // −α_{a,b} = ε_{b+1} − ε_a maps to a positive root iff w(a) > w(b+1)
    let mut set = Vec::new();
    for a in 1..rank {
        for b in a..rank {
            if w.apply(a) > w.apply(b + 1) {
                set.push((a, b));
            }
        }
    }
    let ell = ell_vector(i);
    let mut expect = Vec::new();
    for p in 0..i.n {
        for q in p..i.n {
            expect.push((ell[p], ell[q]));
        }
    }
    expect.sort_unstable();
    assert_eq!(set, expect, "inversion set differs from the ℓ-grid");
    set
}

/// Degrees t_{p,q} of the root vectors f_{p,q} under the partial
/// abelianization attached to 𝐢.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeTable {
    pub n: usize,
    pub seq: Vec<usize>,
    t: BTreeMap<(usize, usize), usize>,
}

impl DegreeTable {
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.t[&(p, q)]
    }
}

/// Both the closed form t_{p,q} = q−p+1 − #{i_j : p ≤ i_j < q} and the
/// D_l-recursion from the height table; asserts they agree.
pub fn degree_table(i: &ProjSeq) -> DegreeTable {
    let n = i.n;
    // recursion: start from the height table, each D_l lowers the degree of
    // the roots straddling l by one
    let mut rec: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for p in 1..=n {
        for q in p..=n {
            rec.insert((p, q), (q - p + 1) as i64);
        }
    }
    for &l in &i.seq {
        for (&(p, q), v) in rec.iter_mut() {
            if p <= l && l < q {
                *v -= 1;
            }
        }
    }
    let mut t = BTreeMap::new();
    for p in 1..=n {
        for q in p..=n {
            let closed = if p == q {
                1
            } else {
                q - p + 1 - i.seq.iter().filter(|&&l| p <= l && l < q).count()
            };
            assert_eq!(rec[&(p, q)], closed as i64, "degree recursion mismatch");
            t.insert((p, q), closed);
        }
    }
    DegreeTable {
        n,
        seq: i.seq.clone(),
        t,
    }
}

/// The partially abelianized bracket [f_{p,q}, f_{s,r}] for p ≤ s:
/// zero unless s = q+1 and q is not a degenerated arrow, else f_{p,r}.
pub fn bracket(
    i: &ProjSeq,
    (p, q): (usize, usize),
    (s, r): (usize, usize),
) -> Option<(usize, usize)> {
    assert!(p <= q && s <= r && p <= s);
    if s != q + 1 || i.seq.contains(&q) {
        None
    } else {
        Some((p, r))
    }
}

/// Verify that f_{p,q} ↦ f_{ℓ_p,ℓ_q}, realized by the elementary matrix with
/// a single 1 in row ℓ_q+1, column ℓ_p, carries the abelianized bracket to
/// the exact matrix commutator in rank n+1+d(𝐢).
pub fn eta_check(i: &ProjSeq) -> bool {
    let n = i.n;
    let ell = ell_vector(i);
    let rank = i.rank();
    let elementary = |p: usize, q: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; rank]; rank];
        m[ell[q - 1]][ell[p - 1] - 1] = 1; // row ℓ_q+1, column ℓ_p
        m
    };
    let commutator = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; rank]; rank];
        for a in 0..rank {
            for b in 0..rank {
                for k in 0..rank {
                    c[a][b] += x[a][k] * y[k][b] - y[a][k] * x[k][b];
                }
            }
        }
        c
    };
    for p in 1..=n {
        for q in p..=n {
            for s in p..=n {
                for r in s..=n {
                    let x = elementary(s, r);
                    let y = elementary(p, q);
                    // the bracket [f_{p,q}, f_{s,r}] corresponds to the
                    // matrix commutator of the lowering operators applied in
                    // action order
                    let c = commutator(&x, &y);
                    let expect = match bracket(i, (p, q), (s, r)) {
                        Some((a, b)) => elementary(a, b),
                        None => vec![vec![0i64; rank]; rank],
                    };
                    if c != expect {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Ψ^𝐢: coefficient of ϖ_j moves to ϖ_{ℓ_j} in the rank-(n+1+d(𝐢)) lattice.
pub fn psi_weight(i: &ProjSeq, lambda: &[i64]) -> Result<Vec<i64>> {
    if lambda.len() != i.n {
        return Err(Error::LengthMismatch(format!(
            "expected {} fundamental-weight coefficients, got {}",
            i.n,
            lambda.len()
        )));
    }
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NegativeCoefficient(format!("{:?}", lambda)));
    }
    let ell = ell_vector(i);
    let mut out = vec![0i64; i.rank() - 1];
    for (j, &c) in lambda.iter().enumerate() {
        out[ell[j] - 1] += c;
    }
    Ok(out)
}

/// Exact Weyl dimension of the irreducible module of the rank-(N−1) special
/// linear algebra with highest weight Σ λ_r ϖ_r:
/// Π_{1≤p≤q≤N−1} (λ_p + … + λ_q + q−p+1)/(q−p+1).
pub fn weyl_dim(big_n: usize, lambda: &[i64]) -> Result<BigInt> {
    if lambda.len() != big_n - 1 {
        return Err(Error::LengthMismatch(format!(
            "expected {} coefficients for rank {}",
            big_n - 1,
            big_n
        )));
    }
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NegativeCoefficient(format!("{:?}", lambda)));
    }
    let mut prod = BigRational::one();
    for p in 1..big_n {
        for q in p..big_n {
            let s: i64 = lambda[p - 1..q].iter().sum();
            let height = (q - p + 1) as i64;
            prod *= BigRational::new(BigInt::from(s + height), BigInt::from(height));
        }
    }
    assert!(prod.is_integer(), "Weyl dimension product must be integral");
    Ok(prod.to_integer())
}

type Character = BTreeMap<Vec<i64>, BigInt>;

fn add_term(chi: &mut Character, mu: Vec<i64>, c: BigInt) {
    let entry = chi.entry(mu).or_insert_with(BigInt::zero);
    *entry += c;
}

/// Demazure operator D_a on a character in the ε-basis of Z^rank: slides
/// each weight along the α_a root string, with the standard cancellation for
/// anti-dominant strings.
fn demazure_op(chi: &Character, a: usize) -> Character {
    let mut out = Character::new();
    for (mu, c) in chi {
        let k = mu[a - 1] - mu[a];
        if k >= 0 {
            for t in 0..=k {
                let mut nu = mu.clone();
                nu[a - 1] -= t;
                nu[a] += t;
                add_term(&mut out, nu, c.clone());
            }
        } else if k <= -2 {
            for t in 1..=(-k - 1) {
                let mut nu = mu.clone();
                nu[a - 1] += t;
                nu[a] -= t;
                add_term(&mut out, nu, -c.clone());
            }
        }
        // k = −1 contributes nothing
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Dimension of the Demazure module: apply the operators along a reduced
/// word to the extremal character e^λ and sum the coefficients.
pub fn demazure_dim(w: &WeylWord, lambda: &[i64]) -> Result<BigInt> {
    if !w.is_reduced() {
        return Err(Error::NotReduced);
    }
    if lambda.len() != w.rank - 1 {
        return Err(Error::LengthMismatch(format!(
            "expected {} coefficients for rank {}",
            w.rank - 1,
            w.rank
        )));
    }
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(format!("{:?}", lambda)));
    }
    // highest weight in ε-coordinates: ϖ_j = ε_1 + … + ε_j
    let mut mu = vec![0i64; w.rank];
    for (j, &c) in lambda.iter().enumerate() {
        for r in 0..=j {
            mu[r] += c;
        }
    }
    let mut chi = Character::new();
    chi.insert(mu, BigInt::one());
    for &a in w.word.iter().rev() {
        chi = demazure_op(&chi, a);
    }
    let mut total = BigInt::zero();
    for c in chi.values() {
        assert!(c.is_positive(), "Demazure character must be effective");
        total += c;
    }
    Ok(total)
}

/// All projection sequences for a given n, in lexicographic order.
pub fn enumerate_proj_seqs(n: usize) -> Vec<ProjSeq> {
    let mut out = Vec::new();
    let total = 1usize << (n - 1);
    for mask in 0..total {
        let seq: Vec<usize> = (1..n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        out.push(ProjSeq { n, seq });
    }
    out.sort();
    out
}
