//! Dense exact linear algebra over any [`Scalar`] field: reduced row
//! echelon form, kernels, solving, determinants, characteristic
//! polynomials (via Hessenberg reduction), and canonical subspaces.
//!
//! Pivoting is deterministic (first nonzero entry in column order), so
//! every basis this module produces is reproducible run to run.

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-S::one())))
    }

    pub fn scale(&self, c: &S) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc + self.at(i, j).clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn stack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Mat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot_row = (r..self.rows).find(|&i| !self.at(i, c).is_zero());
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, p * self.cols + j);
                }
            }
            let inv = self.at(r, c).inv();
            for j in c..self.cols {
                let v = self.at(r, j).clone() * inv.clone();
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self.at(i, j).clone() - f.clone() * self.at(r, j).clone();
                    *self.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`, one vector per free
    /// column, in column order.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `Ax = b`; `None` if inconsistent. If the system is
    /// underdetermined the free variables are set to zero.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = S::one();
        }
        let pivots = aug.rref();
        // invertible iff the pivots of the left block are exactly 0..n
        if pivots.iter().take(n).filter(|&&c| c < n).count() < n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return S::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(c * n + j, p * n + j);
                }
                det = -det;
            }
            det = det * m.at(c, c).clone();
            let inv = m.at(c, c).inv();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone() * inv.clone();
                for j in c..n {
                    let v = m.at(i, j).clone() - f.clone() * m.at(c, j).clone();
                    *m.at_mut(i, j) = v;
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI - A)` with ascending
    /// coefficients (degree n), computed by Hessenberg reduction.
    pub fn charpoly(&self) -> Vec<S> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| !h.at(i, c).is_zero()) else {
                continue;
            };
            if p != c + 1 {
                for j in 0..n {
                    h.data.swap((c + 1) * n + j, p * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + c + 1, i * n + p);
                }
            }
            let inv = h.at(c + 1, c).inv();
            for i in c + 2..n {
                if h.at(i, c).is_zero() {
                    continue;
                }
                let f = h.at(i, c).clone() * inv.clone();
                for j in 0..n {
                    let v = h.at(i, j).clone() - f.clone() * h.at(c + 1, j).clone();
                    *h.at_mut(i, j) = v;
                }
                for i2 in 0..n {
                    let v = h.at(i2, c + 1).clone() + f.clone() * h.at(i2, i).clone();
                    *h.at_mut(i2, c + 1) = v;
                }
            }
        }
        // recurrence over leading principal minors of xI - H
        let mut polys: Vec<Vec<S>> = vec![vec![S::one()]];
        for m in 1..=n {
            // (x - h[m-1][m-1]) * p_{m-1}
            let prev = &polys[m - 1];
            let mut p = vec![S::zero(); prev.len() + 1];
            for (i, c) in prev.iter().enumerate() {
                p[i + 1] = p[i + 1].clone() + c.clone();
                p[i] = p[i].clone() - h.at(m - 1, m - 1).clone() * c.clone();
            }
            let mut sub_prod = S::one();
            for i in (1..m).rev() {
                // product of subdiagonal entries h[j][j-1] for j = i..m-1
                sub_prod = sub_prod * h.at(i, i - 1).clone();
                let coef = h.at(i - 1, m - 1).clone() * sub_prod.clone();
                if coef.is_zero() {
                    continue;
                }
                for (j, c) in polys[i - 1].iter().enumerate() {
                    p[j] = p[j].clone() - coef.clone() * c.clone();
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

/// Row space in canonical (reduced row echelon) form. Two subspaces are
/// equal iff their canonical bases are equal componentwise.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<S> {
    pub ambient: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<S>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient);
        }
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: vec![],
            };
        }
        let mut m = Mat::from_rows(vectors);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: vec![],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[pivot].is_zero() {
                let f = v[pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::from_spanning(self.ambient, vs)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(self.ambient);
        }
        // rows (u, v) with u*A = v*B span the intersection via u*A
        let a = Mat::from_rows(self.basis.clone());
        let b = Mat::from_rows(other.basis.clone());
        let stacked = a.stack(&b.scale(&(-S::one())));
        let left_kernel = stacked.transpose().kernel();
        let vectors = left_kernel
            .into_iter()
            .map(|uv| {
                let mut w = vec![S::zero(); self.ambient];
                for (i, c) in uv[..self.dim()].iter().enumerate() {
                    for (wj, aj) in w.iter_mut().zip(a.row(i)) {
                        *wj = wj.clone() + c.clone() * aj.clone();
                    }
                }
                w
            })
            .collect();
        Self::from_spanning(self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_rank_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[rint(3), rint(2)]).unwrap();
        assert_eq!(x, vec![rint(1), rint(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Mat::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn det_and_charpoly() {
        let a = m(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 1]]);
        assert_eq!(a.det(), rint(7));
        // companion matrix of x^3 - 2x - 5
        let c = m(&[&[0, 0, 5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(c.charpoly(), vec![rint(-5), rint(-2), rint(0), rint(1)]);
        // charpoly constant term = (-1)^n det
        assert_eq!(a.charpoly()[0], -a.det());
    }

    #[test]
    fn subspace_lattice_ops() {
        let u = Subspace::from_spanning(3, vec![vec![rint(1), rint(0), rint(0)], vec![rint(0), rint(1), rint(0)]]);
        let v = Subspace::from_spanning(3, vec![vec![rint(0), rint(1), rint(1)], vec![rint(0), rint(0), rint(1)]]);
        let s = u.sum(&v);
        assert_eq!(s.dim(), 3);
        let i = u.intersect(&v);
        assert_eq!(i.dim(), 1);
        assert!(u.contains(&[rint(2), rint(-3), rint(0)]));
        assert!(!u.contains(&[rint(0), rint(0), rint(1)]));
        assert!(s.contains_subspace(&u) && s.contains_subspace(&v));
    }
}
