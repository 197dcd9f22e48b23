use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{PrincipalSeries, PrincipalSeriesFamily};
use crate::exact_kernel::{int, ExactMatrix, Rational, Signature};
use crate::root_data::WeylElement;

/// Solutions of the invariance equations for a form on `X₁(ν)`.
#[derive(Clone, Debug, PartialEq)]
pub enum HermitianForm {
    /// Unique up to scale, normalized so `⟨1⊗1, 1⊗1⟩ = 1` when that is nonzero.
    Unique(ExactMatrix<Rational>),
    NonHermitian,
    /// More than one independent invariant form.
    Degenerate(Vec<ExactMatrix<Rational>>),
}

impl HermitianForm {
    pub fn label(&self) -> &'static str {
        match self {
            HermitianForm::Unique(_) => "true",
            HermitianForm::NonHermitian => "false",
            HermitianForm::Degenerate(_) => "degenerate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphericalQuotient {
    pub dim: usize,
    pub radical_dim: usize,
    pub signature: Signature,
    pub spherical_survives: bool,
    pub definite: bool,
}

/// One row of a unitarity scan.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRecord {
    pub nu: String,
    pub hermitian: String,
    pub radical_dim: Option<usize>,
    pub pos: Option<usize>,
    pub neg: Option<usize>,
    pub zero: Option<usize>,
    pub unitary: Option<bool>,
}

fn eps_star(ps: &PrincipalSeries, i: usize) -> ExactMatrix<Rational> {
    let mut m = ps.eps(i).neg();
    for rp in ps.algebra().positive() {
        if rp.c.is_zero() || rp.root[i] == 0 {
            continue;
        }
        m = m.add(&ps.group(&rp.reflection).scale(&(&rp.c * int(rp.root[i]))));
    }
    m
}

fn form_from_phi(ps: &PrincipalSeries, phi: &[Rational]) -> ExactMatrix<Rational> {
    let weyl = ps.algebra().weyl();
    let fam = ps.family();
    ExactMatrix::from_fn(weyl.len(), weyl.len(), |a, b| phi[fam.index_of(&weyl[a].inverse().compose(&weyl[b]))].clone())
}

/// Invariant forms `F_{u,v} = φ(u⁻¹v)` with `π(ε_i)ᵀF = F π(ε_i*)`.
///
/// Forms of this shape are automatically `W`-invariant; it is enough to
/// impose the remaining equations against `1 ⊗ 1`.
pub fn hermitian_form(ps: &PrincipalSeries) -> HermitianForm {
    let weyl = ps.algebra().weyl();
    let fam = ps.family();
    let n = weyl.len();
    let e = fam.index_of(&WeylElement::identity(ps.algebra().k()));
    let inv: Vec<usize> = weyl.iter().map(|w| fam.index_of(&w.inverse())).collect();
    let mut rows = Vec::new();
    for i in 0..ps.algebra().k() {
        let ei = ps.eps(i);
        let star_col = eps_star(ps, i).column(e);
        for a in 0..n {
            let mut row = vec![Rational::zero(); n];
            for c in 0..n {
                let x = ei.get(c, a);
                if !x.is_zero() {
                    row[inv[c]] += x;
                }
                if !star_col[c].is_zero() {
                    row[fam.index_of(&weyl[a].inverse().compose(&weyl[c]))] -= &star_col[c];
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let sols = if rows.is_empty() {
        (0..n).map(|j| (0..n).map(|i| if i == j { int(1) } else { int(0) }).collect()).collect()
    } else {
        ExactMatrix::from_rows(rows).nullspace()
    };
    match sols.len() {
        0 => HermitianForm::NonHermitian,
        1 => {
            let phi = &sols[0];
            let pivot = if !phi[e].is_zero() { phi[e].clone() } else { phi.iter().find(|x| !x.is_zero()).unwrap().clone() };
            let phi: Vec<Rational> = phi.iter().map(|x| x / &pivot).collect();
            let f = form_from_phi(ps, &phi);
            if f.is_symmetric() {
                HermitianForm::Unique(f)
            } else {
                HermitianForm::NonHermitian
            }
        }
        _ => HermitianForm::Degenerate(sols.iter().map(|phi| form_from_phi(ps, phi)).collect()),
    }
}

/// Full check of `⟨x·u, v⟩ = ⟨u, x*·v⟩` on generators.
pub fn is_invariant_form(ps: &PrincipalSeries, f: &ExactMatrix<Rational>) -> bool {
    let k = ps.algebra().k();
    (0..k).all(|i| ps.eps(i).transpose().mul(f) == f.mul(&eps_star(ps, i)))
        && (0..ps.algebra().simple().len()).all(|a| {
            let s = ps.simple(a);
            s.transpose().mul(f) == f.mul(s)
        })
}

/// Quotient of `X₁(ν)` by the radical of its invariant form.
pub fn spherical_quotient(ps: &PrincipalSeries) -> crate::Result<SphericalQuotient> {
    let f = match hermitian_form(ps) {
        HermitianForm::Unique(f) => f,
        HermitianForm::NonHermitian => return Err(crate::Error::NotInvariant("no invariant hermitian form".into())),
        HermitianForm::Degenerate(_) => return Err(crate::Error::NotInvariant("invariant form is not unique".into())),
    };
    Ok(quotient_of(&f))
}

fn quotient_of(f: &ExactMatrix<Rational>) -> SphericalQuotient {
    let signature = f.signature().expect("symmetric form");
    let n = f.rows();
    let sph = vec![Rational::one(); n];
    SphericalQuotient {
        dim: n - signature.zero,
        radical_dim: signature.zero,
        spherical_survives: f.apply(&sph).iter().any(|x| !x.is_zero()),
        definite: signature.pos == 0 || signature.neg == 0,
        signature,
    }
}

/// Points `t·ρ_c`.
pub fn scan_line(fam: &PrincipalSeriesFamily, ts: &[Rational]) -> Vec<Vec<Rational>> {
    let rho = fam.rho();
    ts.iter().map(|t| rho.iter().map(|r| r * t).collect()).collect()
}

pub fn unitarity_scan(fam: &PrincipalSeriesFamily, points: &[Vec<Rational>]) -> Vec<ScanRecord> {
    points
        .par_iter()
        .map(|nu| {
            let ps = fam.at(nu);
            let label: Vec<String> = nu.iter().map(|x| x.to_string()).collect();
            let form = hermitian_form(&ps);
            let mut rec = ScanRecord {
                nu: label.join(";"),
                hermitian: form.label().to_string(),
                radical_dim: None,
                pos: None,
                neg: None,
                zero: None,
                unitary: None,
            };
            match form {
                HermitianForm::Unique(f) => {
                    let q = quotient_of(&f);
                    rec.radical_dim = Some(q.radical_dim);
                    rec.pos = Some(q.signature.pos);
                    rec.neg = Some(q.signature.neg);
                    rec.zero = Some(q.signature.zero);
                    rec.unitary = Some(q.definite);
                }
                HermitianForm::NonHermitian => rec.unitary = Some(false),
                HermitianForm::Degenerate(_) => {}
            }
            rec
        })
        .collect()
}
