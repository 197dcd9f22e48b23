use num_traits::Zero;

use crate::exact_kernel::{Echelon, ExactMatrix, Field, GaussRational, Rational};

use super::CMatrix;

pub fn elementary(n: usize, i: usize, j: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m.set(i, j, GaussRational::real(Rational::from_integer(1.into())));
    m
}

pub fn complexify(m: &ExactMatrix<Rational>) -> CMatrix {
    m.map(|x| GaussRational::real(x.clone()))
}

pub fn diagonal(entries: &[i64]) -> CMatrix {
    let n = entries.len();
    CMatrix::from_fn(n, n, |i, j| {
        if i == j { GaussRational::real(Rational::from_integer(entries[i].into())) } else { GaussRational::default() }
    })
}

pub fn conj(m: &CMatrix) -> CMatrix {
    m.map(|x| x.conj())
}

/// Entries of `m` in row-major order.
pub fn flatten(m: &CMatrix) -> Vec<GaussRational> {
    m.entries().to_vec()
}

pub fn unflatten(n: usize, v: &[GaussRational]) -> CMatrix {
    CMatrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

/// Indices of a maximal independent subfamily, greedily from the front.
pub fn independent_indices(vs: &[Vec<GaussRational>]) -> Vec<usize> {
    let mut e = Echelon::new();
    (0..vs.len()).filter(|&i| e.insert(&vs[i])).collect()
}

/// Basis of `{Σ c_i B_i : Σ c_i L(B_i) = 0}` for a linear map `L` into matrices.
pub fn kernel_combinations(basis: &[CMatrix], image: impl Fn(&CMatrix) -> Vec<CMatrix>) -> Vec<CMatrix> {
    if basis.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<GaussRational>> = basis.iter().map(|b| image(b).iter().flat_map(flatten).collect()).collect();
    let rows = cols[0].len();
    if rows == 0 {
        return basis.to_vec();
    }
    let a = ExactMatrix::from_fn(rows, basis.len(), |r, c| cols[c][r].clone());
    a.nullspace().into_iter().map(|c| combine(basis, &c)).collect()
}

pub fn combine(basis: &[CMatrix], coeffs: &[GaussRational]) -> CMatrix {
    let n = basis[0].rows();
    let mut out = CMatrix::zeros(n, n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}
