//! Dense exact matrices with Gaussian elimination over any [`Scalar`].

use crate::field::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<S: Scalar> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<S>,
    /// Prototype element; needed to mint zeros/ones for empty shapes.
    proto: S,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize, proto: S) -> Self {
        let z = proto.zero();
        Mat {
            rows,
            cols,
            data: vec![z; rows * cols],
            proto,
        }
    }

    pub fn identity(n: usize, proto: S) -> Self {
        let mut m = Mat::zeros(n, n, proto);
        for i in 0..n {
            let one = m.proto.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>, proto: S) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat {
            rows: r,
            cols: c,
            data,
            proto,
        }
    }

    pub fn proto(&self) -> &S {
        &self.proto
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, rhs.cols, self.proto.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        let z = self.proto.zero();
        let mut out = vec![z; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] = out[i].add(&a.mul(&v[j]));
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j).sub(rhs.get(i, j));
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// In-place reduction to row echelon form; returns pivot column indices.
    pub fn row_echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // find pivot
            let mut piv = None;
            for r in row..self.rows {
                if !self.get(r, col).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            self.swap_rows(row, piv);
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).sub(&factor.mul(self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_echelon().len()
    }

    /// Basis of the kernel, returned as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.row_echelon();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let z = self.proto.zero();
            let mut v = vec![z; self.cols];
            v[free] = self.proto.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix whose rows span the row space (reduced, no zero rows).
    pub fn row_space_basis(&self) -> Mat<S> {
        let mut m = self.clone();
        let pivots = m.row_echelon();
        let mut rows = Vec::new();
        for r in 0..pivots.len() {
            let row: Vec<S> = (0..self.cols).map(|j| m.get(r, j).clone()).collect();
            rows.push(row);
        }
        if rows.is_empty() {
            Mat::zeros(0, self.cols, self.proto.clone())
        } else {
            Mat::from_rows(rows, self.proto.clone())
        }
    }
}

/// Span of a list of vectors in F^d, kept as a reduced row basis.
#[derive(Clone, Debug)]
pub struct Subspace<S: Scalar> {
    pub ambient: usize,
    /// Reduced row-echelon basis rows.
    pub basis: Mat<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize, proto: S) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient, proto),
        }
    }

    pub fn full(ambient: usize, proto: S) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient, proto),
        }
    }

    /// A combination of the basis vectors with coefficients drawn from `coeff`.
    pub fn random_element(&self, mut coeff: impl FnMut() -> S) -> Vec<S> {
        let proto = self.basis.proto.clone();
        let z = proto.zero();
        let mut v = vec![z; self.ambient];
        for r in 0..self.basis.rows {
            let c = coeff();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                v[j] = v[j].add(&c.mul(self.basis.get(r, j)));
            }
        }
        v
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<S>], proto: S) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient, proto);
        }
        let m = Mat::from_rows(vectors.to_vec(), proto);
        Subspace {
            ambient,
            basis: m.row_space_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut rows: Vec<Vec<S>> = (0..self.basis.rows)
            .map(|r| (0..self.ambient).map(|j| self.basis.get(r, j).clone()).collect())
            .collect();
        rows.push(v.to_vec());
        let m = Mat::from_rows(rows, self.basis.proto.clone());
        m.rank() == self.dim()
    }

    /// Image of this subspace under the linear map `f` (rows of f = target coords).
    pub fn image_under(&self, f: &Mat<S>) -> Subspace<S> {
        let vectors: Vec<Vec<S>> = (0..self.basis.rows)
            .map(|r| {
                let v: Vec<S> = (0..self.ambient).map(|j| self.basis.get(r, j).clone()).collect();
                f.apply(&v)
            })
            .collect();
        Subspace::from_vectors(f.rows, &vectors, self.basis.proto.clone())
    }

    /// Intersection with another subspace of the same ambient space.
    pub fn intersect(&self, other: &Subspace<S>) -> Subspace<S> {
        assert_eq!(self.ambient, other.ambient);
        let proto = self.basis.proto.clone();
        // Solve a*B1 + b*B2 = 0 in row form: kernel of [B1^T | B2^T].
        let k1 = self.dim();
        let k2 = other.dim();
        if k1 == 0 || k2 == 0 {
            return Subspace::zero(self.ambient, proto);
        }
        let mut m = Mat::zeros(self.ambient, k1 + k2, proto.clone());
        for j in 0..k1 {
            for i in 0..self.ambient {
                m.set(i, j, self.basis.get(j, i).clone());
            }
        }
        for j in 0..k2 {
            for i in 0..self.ambient {
                m.set(i, k1 + j, other.basis.get(j, i).neg());
            }
        }
        let kern = m.kernel_basis();
        let vectors: Vec<Vec<S>> = kern
            .iter()
            .map(|coef| {
                let z = proto.zero();
                let mut v = vec![z; self.ambient];
                for (j, c) in coef.iter().take(k1).enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..self.ambient {
                        v[i] = v[i].add(&c.mul(self.basis.get(j, i)));
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient, &vectors, proto)
    }

    /// Preimage f^{-1}(self) where f maps F^cols -> F^rows and self sits in F^rows.
    pub fn preimage_under(&self, f: &Mat<S>) -> Subspace<S> {
        assert_eq!(self.ambient, f.rows);
        let proto = self.basis.proto.clone();
        let k = self.dim();
        // v in preimage iff f v in span(basis): solve [f | -basis^T] kernel, keep v part.
        let mut m = Mat::zeros(f.rows, f.cols + k, proto.clone());
        for i in 0..f.rows {
            for j in 0..f.cols {
                m.set(i, j, f.get(i, j).clone());
            }
            for j in 0..k {
                m.set(i, f.cols + j, self.basis.get(j, i).neg());
            }
        }
        let kern = m.kernel_basis();
        let vectors: Vec<Vec<S>> = kern.iter().map(|w| w[..f.cols].to_vec()).collect();
        Subspace::from_vectors(f.cols, &vectors, proto)
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace<S>) -> Subspace<S> {
        assert_eq!(self.ambient, other.ambient);
        let proto = self.basis.proto.clone();
        let mut vectors: Vec<Vec<S>> = Vec::new();
        for r in 0..self.basis.rows {
            vectors.push((0..self.ambient).map(|j| self.basis.get(r, j).clone()).collect());
        }
        for r in 0..other.basis.rows {
            vectors.push((0..self.ambient).map(|j| other.basis.get(r, j).clone()).collect());
        }
        Subspace::from_vectors(self.ambient, &vectors, proto)
    }
}
