use num_traits::Zero;

use super::ops::{Shape, Vector};
use super::TensorSpace;
use crate::error::{Error, Result};
use crate::exact_kernel::{Echelon, ExactMatrix, GaussRational, Ring};
use crate::root_data::{GroupFamily, WeylElement};

/// A basis of `(μ₀*⊗V^{⊗k})^M` indexed by `W_ℝ`.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    pub shape: Shape,
    pub vectors: Vec<Vector>,
    pub labels: Vec<WeylElement>,
    pivots: Vec<usize>,
    pivot_inverse: ExactMatrix<GaussRational>,
}

impl InvariantBasis {
    fn new(shape: Shape, vectors: Vec<Vector>, labels: Vec<WeylElement>) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self { shape, vectors, labels, pivots: Vec::new(), pivot_inverse: ExactMatrix::zeros(0, 0) });
        }
        let rows = ExactMatrix::from_rows(vectors.clone());
        let (_, pivots) = rows.rref();
        if pivots.len() != vectors.len() {
            return Err(Error::Other("invariant vectors are linearly dependent".into()));
        }
        let square = ExactMatrix::from_fn(pivots.len(), pivots.len(), |r, c| vectors[c][pivots[r]].clone());
        let pivot_inverse = square.inverse()?;
        Ok(Self { shape, vectors, labels, pivots, pivot_inverse })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.labels.iter().position(|x| x == w)
    }

    /// Coordinates of a vector in the span, or `None` when it is outside.
    pub fn coordinates(&self, v: &[GaussRational]) -> Option<Vec<GaussRational>> {
        let sample: Vec<GaussRational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let c = self.pivot_inverse.apply(&sample);
        let mut back = self.shape.zero();
        for (x, b) in c.iter().zip(&self.vectors) {
            if !x.is_zero() {
                super::ops::add_into(&mut back, &super::ops::scale(b, x));
            }
        }
        (back == v).then_some(c)
    }

    /// Matrix of an operator preserving the span.
    pub fn matrix_of(&self, op: impl Fn(&[GaussRational]) -> Result<Vector>) -> Result<ExactMatrix<GaussRational>> {
        let mut cols = Vec::with_capacity(self.len());
        for b in &self.vectors {
            let img = op(b)?;
            cols.push(self.coordinates(&img).ok_or_else(|| Error::Other("operator leaves the invariant space".into()))?);
        }
        Ok(ExactMatrix::from_columns(self.len(), &cols))
    }
}

/// Basis of `(μ₀*⊗V^{⊗m})^M` by linear algebra: coordinate vectors fixed
/// by the (diagonal) finite generators of `M`, then the kernel of `𝔪`.
pub fn solve_invariants(ts: &TensorSpace, m: usize) -> Result<Vec<Vector>> {
    let model = ts.model();
    let shape = Shape::new(model.dim_v(), m);
    let n = model.dim_v();
    let mu0 = model.mu0();
    let mut signs = Vec::new();
    for g in model.m_finite() {
        let diag: Vec<GaussRational> = (0..n).map(|i| g.get(i, i).clone()).collect();
        let off = (0..n).any(|i| (0..n).any(|j| i != j && !g.get(i, j).is_zero()));
        if off {
            return Err(Error::Other("finite generators of M are expected to be diagonal".into()));
        }
        signs.push((diag, model.character_value(mu0, g)));
    }
    let candidates: Vec<usize> = (0..shape.size())
        .filter(|&idx| {
            let d = shape.digits(idx);
            signs.iter().all(|(diag, chi)| {
                let val = d.iter().fold(GaussRational::from_int(1), |acc, &i| acc * diag[i].clone());
                val == *chi
            })
        })
        .collect();
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let sub = TensorSpace::with_slots(model.clone(), m);
    let images: Vec<Vec<Vector>> = candidates
        .iter()
        .map(|&c| {
            let e = shape.basis_vector(&shape.digits(c));
            model.m().iter().map(|x| sub.act_lie(x, &e)).collect()
        })
        .collect();
    let coeffs: Vec<Vec<GaussRational>> = if model.m().is_empty() {
        (0..candidates.len())
            .map(|i| (0..candidates.len()).map(|j| GaussRational::from_int((i == j) as i64)).collect())
            .collect()
    } else {
        let rows = model.m().len() * shape.size();
        let a = ExactMatrix::from_fn(rows, candidates.len(), |r, c| {
            images[c][r / shape.size()][r % shape.size()].clone()
        });
        a.nullspace()
    };
    Ok(coeffs
        .into_iter()
        .map(|c| {
            let mut v = shape.zero();
            for (x, &idx) in c.iter().zip(&candidates) {
                v[idx] = x.clone();
            }
            v
        })
        .collect())
}

/// The explicit basis: `e_{σ(1)}⊗⋯⊗e_{σ(n)}` for `GL(n,R)`, and
/// `f_{σ(1)}^{η₁}⊗⋯⊗f_{σ(k)}^{η_k}` with `f_j^η = e_{p−j+1} + η e_{p+j}`
/// otherwise. The label of a vector is the signed permutation `i ↦ η_i σ(i)`.
pub fn closed_form_basis(ts: &TensorSpace) -> Result<InvariantBasis> {
    let model = ts.model();
    let g = model.group();
    let n = model.dim_v();
    let shape = ts.shape();
    if ts.k() != model.rank() {
        return Err(Error::Other("the explicit basis needs k equal to the real rank".into()));
    }
    let unit = |i: usize| {
        let mut v = vec![GaussRational::default(); n];
        v[i] = GaussRational::from_int(1);
        v
    };
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    for w in ts.weyl_datum().weyl_enumerate() {
        let factors: Vec<Vector> = w
            .images()
            .iter()
            .map(|&x| {
                let j = x.unsigned_abs() as usize;
                if g.family == GroupFamily::GL {
                    unit(j - 1)
                } else {
                    let eta = if x > 0 { 1 } else { -1 };
                    let mut f = unit(g.p - j);
                    f[g.p + j - 1] = GaussRational::from_int(eta);
                    f
                }
            })
            .collect();
        vectors.push(shape.simple_tensor(&factors));
        labels.push(w);
    }
    InvariantBasis::new(shape, vectors, labels)
}

/// `(μ₀*⊗V^{⊗m})^M`: empty for `m < k`; for `m = k` the explicit basis,
/// after checking that it spans the solved space.
pub fn invariants(ts: &TensorSpace, m: usize) -> Result<InvariantBasis> {
    let solved = solve_invariants(ts, m)?;
    let shape = Shape::new(ts.model().dim_v(), m);
    if m != ts.model().rank() {
        let labels = Vec::new();
        if solved.is_empty() {
            return InvariantBasis::new(shape, solved, labels);
        }
        return Err(Error::Other(format!("invariants in {m} slots are not indexed by W")));
    }
    let full = TensorSpace::with_slots(ts.model().clone(), m);
    let closed = closed_form_basis(&full)?;
    let mut e = Echelon::new();
    for v in &closed.vectors {
        e.insert(v);
    }
    if solved.len() != closed.len() || solved.iter().any(|v| !e.contains(v)) {
        return Err(Error::Other(format!(
            "explicit basis ({}) does not match the solved invariants ({}) for {}",
            closed.len(),
            solved.len(),
            ts.model().group()
        )));
    }
    Ok(closed)
}
