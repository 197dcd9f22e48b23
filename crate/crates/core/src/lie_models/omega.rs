use super::{CMatrix, Kind, LieModel};
use num_traits::Zero;

use crate::exact_kernel::{Field, GaussRational, Ring};

/// The flip `R₁₂` on `V⊗V`.
pub fn flip(n: usize) -> CMatrix {
    let mut r = CMatrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            r.set(b * n + a, a * n + b, GaussRational::from_int(1));
        }
    }
    r
}

/// Projection of `V⊗V` onto its trivial isotypic component for a model
/// preserving a bilinear form; zero for `gl`.
pub fn trivial_projection(model: &LieModel) -> CMatrix {
    let n = model.dim_v();
    let mut pr = CMatrix::zeros(n * n, n * n);
    if model.kind() == Kind::Gl {
        return pr;
    }
    let j = model.form().expect("form");
    let jinv = j.inverse().expect("nondegenerate form");
    let t: Vec<GaussRational> = (0..n * n).map(|x| jinv.get(x / n, x % n).clone()).collect();
    let phi: Vec<GaussRational> = (0..n * n).map(|x| j.get(x / n, x % n).clone()).collect();
    let norm = t.iter().zip(&phi).fold(GaussRational::default(), |acc, (a, b)| acc + a.clone() * b.clone());
    let inv = norm.inv().expect("nonzero pairing");
    for r in 0..n * n {
        for c in 0..n * n {
            if !t[r].is_zero() && !phi[c].is_zero() {
                pr.set(r, c, t[r].clone() * phi[c].clone() * inv.clone());
            }
        }
    }
    pr
}

fn omega_sum<'a>(n: usize, pairs: impl Iterator<Item = (&'a CMatrix, &'a CMatrix)>) -> CMatrix {
    let mut out = CMatrix::zeros(n * n, n * n);
    for (e, d) in pairs {
        out = out.add(&e.kron(d));
    }
    out
}

/// `Σ_E E ⊗ E*` on `V⊗V`.
pub fn omega_on_vv(model: &LieModel) -> CMatrix {
    omega_sum(model.dim_v(), model.basis().iter().map(|b| (&b.matrix, &b.dual)))
}

/// `Σ_{E∈k} E ⊗ E*` on `V⊗V`.
pub fn omega_k_on_vv(model: &LieModel) -> crate::Result<CMatrix> {
    if model.xi().is_none() {
        return Err(crate::Error::UnsupportedGroup(format!("{} has no ξ", model.group())));
    }
    Ok(omega_sum(model.dim_v(), model.basis().iter().filter(|b| b.in_k).map(|b| (&b.matrix, &b.dual))))
}
