use serde::Serialize;

use super::{Field, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Inertia of a Hermitian matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    /// Definite on the complement of its radical.
    pub fn is_semidefinite(&self) -> bool {
        self.pos == 0 || self.neg == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.neg == 0 && self.zero == 0
    }
}

impl<T: Ring> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: T) {
        let k = i * self.cols + j;
        let old = std::mem::replace(&mut self.data[k], T::zero());
        self.data[k] = old + v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_at(i, j, a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols).clone() * o.get(i % o.rows, j % o.cols).clone()
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl<T: Field> ExactMatrix<T> {
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() - f.clone() * pj.clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
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
        self.rref().1.len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    /// One solution of `self·x = b`, if any.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = T::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return T::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = det * piv.clone();
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone() * inv.clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Inertia by congruence diagonalization.
    ///
    /// A zero pivot with a nonzero off-diagonal entry is cleared by adding the
    /// partner row and column, which splits the 2×2 block into one positive
    /// and one negative square.
    pub fn signature(&self) -> Result<Signature> {
        if !self.is_hermitian() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sig = Signature { pos: 0, neg: 0, zero: 0 };
        let mut k = 0;
        while k < n {
            if a.get(k, k).is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !a.get(i, i).is_zero()) {
                    a.sym_swap(i, k);
                } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                    // new a_kk = 2|a_kj|^2
                    let t = a.get(k, j).clone();
                    a.sym_add(k, j, t);
                    if a.get(k, k).is_zero() {
                        return Err(Error::Other("congruence step failed".into()));
                    }
                } else {
                    // row k vanishes
                    sig.zero += 1;
                    k += 1;
                    continue;
                }
            }
            let piv = a.get(k, k).clone();
            match piv.real_sign() {
                Some(1) => sig.pos += 1,
                Some(-1) => sig.neg += 1,
                _ => return Err(Error::NotSymmetric),
            }
            let inv = piv.inv().expect("nonzero pivot");
            for r in k + 1..n {
                if a.get(r, k).is_zero() {
                    continue;
                }
                let f = a.get(r, k).clone() * inv.clone();
                a.sym_sub(r, k, f);
            }
            k += 1;
        }
        Ok(sig)
    }

    fn sym_swap(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += c·row_j, col_i += conj(c)·col_j
    fn sym_add(&mut self, i: usize, j: usize, c: T) {
        for col in 0..self.cols {
            let v = self.get(i, col).clone() + c.clone() * self.get(j, col).clone();
            self.set(i, col, v);
        }
        let cc = c.conj();
        for row in 0..self.rows {
            let v = self.get(row, i).clone() + self.get(row, j).clone() * cc.clone();
            self.set(row, i, v);
        }
    }

    /// row_i -= c·row_j, col_i -= conj(c)·col_j
    fn sym_sub(&mut self, i: usize, j: usize, c: T) {
        self.sym_add(i, j, -c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::{int, rat, GaussRational, Rational};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(a.apply(&v).iter().all(|x| x == &int(0)));
        }
    }

    #[test]
    fn signature_handles_zero_diagonal() {
        let hyperbolic = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(hyperbolic.signature().unwrap(), Signature { pos: 1, neg: 1, zero: 0 });
        let degenerate = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(degenerate.signature().unwrap(), Signature { pos: 1, neg: 0, zero: 1 });
        assert_eq!(m(&[&[0, 1], &[2, 0]]).signature(), Err(Error::NotSymmetric));
        let z = m(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(z.signature().unwrap(), Signature { pos: 1, neg: 1, zero: 1 });
    }

    #[test]
    fn hermitian_signature_over_gaussian() {
        let i = GaussRational::i();
        let one = GaussRational::from_int(1);
        let z = GaussRational::from_int(0);
        let h = ExactMatrix::from_rows(vec![vec![z.clone(), i.clone()], vec![-i, z]]);
        assert_eq!(h.signature().unwrap(), Signature { pos: 1, neg: 1, zero: 0 });
        let p = ExactMatrix::from_rows(vec![vec![one.clone(), GaussRational::i()], vec![-GaussRational::i(), one.clone() + one]]);
        assert!(p.signature().unwrap().is_positive_definite());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.mul(&a.inverse().unwrap()), ExactMatrix::identity(2));
        assert_eq!(a.determinant(), int(1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        assert_eq!(a.solve(&[int(3), int(2)]), Some(vec![int(1), int(1)]));
    }

    fn sym_matrix() -> impl Strategy<Value = ExactMatrix<Rational>> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(-3i64..4, n * n).prop_map(move |v| {
                let a = ExactMatrix::from_fn(n, n, |i, j| int(v[i * n + j]));
                a.add(&a.transpose())
            })
        })
    }

    proptest! {
        #[test]
        fn signature_is_congruence_invariant(a in sym_matrix(), seed in prop::collection::vec(-2i64..3, 16)) {
            let n = a.rows();
            let p = ExactMatrix::from_fn(n, n, |i, j| if i == j { int(1) } else if i < j { int(seed[(i * 4 + j) % 16]) } else { int(0) });
            let b = p.transpose().mul(&a).mul(&p);
            let s = a.signature().unwrap();
            prop_assert_eq!(s, b.signature().unwrap());
            prop_assert_eq!(s.pos + s.neg, a.rank());
        }

        #[test]
        fn rank_nullity(v in prop::collection::vec(-3i64..4, 12)) {
            let a = ExactMatrix::from_fn(3, 4, |i, j| rat(v[i * 4 + j], 1));
            prop_assert_eq!(a.rank() + a.nullspace().len(), 4);
        }
    }
}
