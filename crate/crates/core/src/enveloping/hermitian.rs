use std::collections::HashMap;

use num_traits::{One, Zero};

use super::oda::{EquivariantHom, OdaSetup};
use super::pbw::{IwasawaBasis, UEAElement, Word};
use super::xr::{gamma_map, TruncatedXR, XElement};
use crate::error::{Error, Result};
use crate::exact_kernel::{ExactMatrix, Field, GaussRational, Rational, Ring};
use crate::hecke_algebra::HeckeAlgebra;
use crate::lie_models::CMatrix;
use crate::principal_series::{hermitian_form, HermitianForm, PrincipalSeries};
use crate::report::CheckResult;

/// The Casimir `Σ_b b b*` in PBW normal form.
pub fn casimir(basis: &IwasawaBasis) -> Result<UEAElement> {
    let mut omega = UEAElement::zero();
    for b in basis.model().basis() {
        omega = omega.add(&basis.embed(&b.matrix)?.concat(&basis.embed(&b.dual)?));
    }
    Ok(basis.lie().pbw_reduce(&omega))
}

/// Value of a polynomial in the Hecke coordinates at a point.
pub fn evaluate_at(x: &XElement, nu: &[Rational]) -> GaussRational {
    let mut out = GaussRational::default();
    for (m, c) in &x.poly {
        let v = m.iter().fold(Rational::one(), |acc, &i| acc * &nu[i]);
        out = out + c.clone() * GaussRational::real(v);
    }
    out
}

/// Eigenvalue of the Casimir on the spherical principal series whose
/// infinitesimal character is `ν` in the Hecke coordinates.
pub fn casimir_eigenvalue(setup: &OdaSetup, nu: &[Rational]) -> Result<GaussRational> {
    let rho: Vec<GaussRational> = setup.basis().rho().into_iter().map(GaussRational::real).collect();
    let q = gamma_map(setup.basis(), setup.iota(), &rho, &casimir(setup.basis())?);
    Ok(evaluate_at(&q, nu))
}

/// `u ↦ u†`, the antilinear antiautomorphism of `U(g)` extending `x ↦ −τ(x)`.
struct Dagger {
    images: Vec<UEAElement>,
}

impl Dagger {
    fn new(basis: &IwasawaBasis) -> Result<Self> {
        let model = basis.model();
        let images = (0..basis.dim())
            .map(|i| basis.embed(&model.tau(basis.element(i)).neg()))
            .collect::<Result<_>>()?;
        Ok(Self { images })
    }

    fn apply(&self, u: &UEAElement) -> UEAElement {
        let mut out = UEAElement::zero();
        for (w, c) in &u.terms {
            let prod = w.iter().rev().fold(UEAElement::one(), |acc, &i| acc.concat(&self.images[i]));
            out = out.add(&prod.scale(&c.conj()));
        }
        out
    }
}

/// `Ad(g)` on words, letter by letter.
fn ad_images(basis: &IwasawaBasis, g: &CMatrix) -> Result<Vec<UEAElement>> {
    let inv = g.inverse()?;
    (0..basis.dim()).map(|i| basis.embed(&g.mul(basis.element(i)).mul(&inv))).collect()
}

fn substitute(images: &[UEAElement], u: &UEAElement) -> UEAElement {
    let mut out = UEAElement::zero();
    for (w, c) in &u.terms {
        let prod = w.iter().fold(UEAElement::one(), |acc, &i| acc.concat(&images[i]));
        out = out.add(&prod.scale(c));
    }
    out
}

/// The functional `u ↦ ⟨u·1, 1⟩` on `U(g)⊗_{U(k)}1` in degrees `≤ D`,
/// normalized by `⟨1, 1⟩ = 1`: it kills `k·𝒳^ℝ`, is invariant under the
/// finite part of `K`, and `Ω` acts by a scalar.
pub struct SphericalFunctional {
    xr: TruncatedXR,
    values: HashMap<Word, GaussRational>,
}

impl SphericalFunctional {
    pub fn solve(basis: &IwasawaBasis, degree: usize, casimir_value: &GaussRational) -> Result<Self> {
        let xr = TruncatedXR::new(basis.clone(), degree);
        let words = xr.words();
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let lie = basis.lie();
        let model = basis.model();
        let omega = casimir(basis)?;
        let finite: Vec<Vec<UEAElement>> = model
            .m_finite()
            .iter()
            .chain(model.extra_component())
            .map(|g| ad_images(basis, g))
            .collect::<Result<_>>()?;
        let k_basis = model.k_basis();
        let mut rows: Vec<Vec<GaussRational>> = Vec::new();
        let mut rhs = Vec::new();
        let mut push = |e: &UEAElement, b: GaussRational| -> Result<()> {
            let mut row = vec![GaussRational::default(); words.len()];
            for (w, c) in &e.terms {
                let i = index.get(w).ok_or_else(|| Error::Other(format!("word {w:?} outside the truncation")))?;
                row[*i] = row[*i].clone() + c.clone();
            }
            rows.push(row);
            rhs.push(b);
            Ok(())
        };
        push(&UEAElement::one(), GaussRational::from_int(1))?;
        for w in &words {
            let u = UEAElement::word(w.clone());
            for z in &k_basis {
                push(&xr.left_mul(z, &u)?, GaussRational::default())?;
            }
            for images in &finite {
                let moved = lie.coset_reduce(&substitute(images, &u));
                push(&moved.add(&u.scale(&GaussRational::from_int(-1))), GaussRational::default())?;
            }
            if w.len() + 2 <= degree {
                let e = lie.coset_reduce(&omega.concat(&u)).add(&u.scale(&-casimir_value.clone()));
                push(&e, GaussRational::default())?;
            }
        }
        let a = ExactMatrix::from_rows(rows);
        if a.rank() != words.len() {
            return Err(Error::Other(format!(
                "spherical functional not determined: rank {} for {} words",
                a.rank(),
                words.len()
            )));
        }
        let sol = a.solve(&rhs).ok_or_else(|| Error::Other("spherical functional: inconsistent system".into()))?;
        Ok(Self { xr, values: words.into_iter().zip(sol).collect() })
    }

    pub fn degree_bound(&self) -> usize {
        self.xr.degree_bound()
    }

    pub fn apply(&self, u: &UEAElement) -> Result<GaussRational> {
        let r = self.xr.reduce(u)?;
        let mut out = GaussRational::default();
        for (w, c) in &r.terms {
            out = out + c.clone() * self.values.get(w).cloned().unwrap_or_default();
        }
        Ok(out)
    }
}

/// Gram matrix of `⟨Υ, Υ'⟩ = Σ_c ⟨Υ(e_c), Υ'(e_c)⟩_X` with `⟨u, v⟩_X =
/// φ(v†u)` and the coordinate form on `μ₀*⊗V^{⊗k}`.
pub fn lie_gram(setup: &OdaSetup, homs: &[EquivariantHom], phi: &SphericalFunctional) -> Result<ExactMatrix<GaussRational>> {
    let dagger = Dagger::new(setup.basis())?;
    let n = setup.tensor_space().dim();
    let shape = setup.tensor_space().shape();
    let values: Vec<Vec<UEAElement>> = homs
        .iter()
        .map(|h| (0..n).map(|c| setup.evaluate(h, &shape.basis_vector(&shape.digits(c)))).collect())
        .collect::<Result<_>>()?;
    let mut gram = ExactMatrix::zeros(homs.len(), homs.len());
    for a in 0..homs.len() {
        for b in 0..homs.len() {
            let mut s = GaussRational::default();
            for c in 0..n {
                if values[a][c].is_zero() || values[b][c].is_zero() {
                    continue;
                }
                s = s + phi.apply(&dagger.apply(&values[b][c]).concat(&values[a][c]))?;
            }
            gram.set(a, b, s);
        }
    }
    Ok(gram)
}

/// Gram matrix of the invariant form on `X(ν)` pulled back along
/// `Υ ↦ Γ_ν(Υ)(v)`.
pub fn hecke_gram(setup: &OdaSetup, homs: &[EquivariantHom], ps: &PrincipalSeries) -> Result<ExactMatrix<GaussRational>> {
    let f = match hermitian_form(ps) {
        HermitianForm::Unique(f) => f,
        other => return Err(Error::Other(format!("no unique invariant form on X(ν): {}", other.label()))),
    };
    let f = f.map(|x| GaussRational::real(x.clone()));
    let v = setup.cyclic().clone();
    let images: Vec<Vec<GaussRational>> = homs
        .iter()
        .map(|h| {
            let (re, im) = setup.gamma(h, &v)?.evaluate(ps);
            Ok(re.into_iter().zip(im).map(|(re, im)| GaussRational { re, im }).collect())
        })
        .collect::<Result<_>>()?;
    let mut gram = ExactMatrix::zeros(homs.len(), homs.len());
    for a in 0..homs.len() {
        let fa = f.apply(&images[a]);
        for b in 0..homs.len() {
            let s = images[b].iter().zip(&fa).fold(GaussRational::default(), |acc, (y, x)| acc + y.conj() * x.clone());
            gram.set(a, b, s);
        }
    }
    Ok(gram)
}

/// `lie = λ·hecke` for a single `λ > 0`, if such a `λ` exists.
fn positive_ratio(lie: &ExactMatrix<GaussRational>, hecke: &ExactMatrix<GaussRational>) -> Option<Rational> {
    let (i, j) = (0..hecke.rows()).flat_map(|i| (0..hecke.cols()).map(move |j| (i, j))).find(|&(i, j)| !hecke.get(i, j).is_zero())?;
    let h = hecke.get(i, j);
    let l = lie.get(i, j);
    let lambda = l.clone() * h.inv()?;
    if !lambda.im.is_zero() || lambda.re <= Rational::zero() {
        return None;
    }
    (hecke.scale(&lambda) == *lie).then_some(lambda.re)
}

/// The form on `F(X^ℝ(ν))` induced by the product form agrees with the
/// pulled-back invariant form on `X(ν)` up to one positive scalar; the two
/// signatures are reported.
pub fn hermitian_transfer_check(setup: &OdaSetup, homs: &[EquivariantHom], nu: &[Rational]) -> CheckResult {
    let label: Vec<String> = nu.iter().map(|x| x.to_string()).collect();
    let res = CheckResult::new(
        "hermitian_transfer",
        setup.tensor_space().model().group().to_string(),
        format!("nu = {}, d = {}", label.join(";"), setup.degree_bound()),
    );
    let run = || -> Result<std::result::Result<String, String>> {
        let c = casimir_eigenvalue(setup, nu)?;
        let phi = SphericalFunctional::solve(setup.basis(), 2 * setup.degree_bound(), &c)?;
        let lie = lie_gram(setup, homs, &phi)?;
        let alg = HeckeAlgebra::from_group(setup.tensor_space().model().group())?;
        let ps = PrincipalSeries::new(&alg, nu)?;
        let hecke = hecke_gram(setup, homs, &ps)?;
        Ok(match positive_ratio(&lie, &hecke) {
            Some(l) => Ok(format!("λ = {l}")),
            None => Err(format!(
                "no positive scalar: Lie-side kernel {}, Hecke-side kernel {}",
                show_kernel(&lie),
                show_kernel(&hecke)
            )),
        })
    };
    match run() {
        Ok(Ok(info)) => CheckResult { parameters: format!("{}; {info}", res.parameters), ..res },
        Ok(Err(w)) => res.with(false, || w),
        Err(e) => res.with(false, || e.to_string()),
    }
}

/// Both forms have the same signature on the span of the homs.
pub fn positivity_transfer_check(setup: &OdaSetup, homs: &[EquivariantHom], nu: &[Rational]) -> CheckResult {
    let label: Vec<String> = nu.iter().map(|x| x.to_string()).collect();
    let res = CheckResult::new(
        "positivity_transfer",
        setup.tensor_space().model().group().to_string(),
        format!("nu = {}, d = {}", label.join(";"), setup.degree_bound()),
    );
    let run = || -> Result<(String, String)> {
        let c = casimir_eigenvalue(setup, nu)?;
        let phi = SphericalFunctional::solve(setup.basis(), 2 * setup.degree_bound(), &c)?;
        let lie = lie_gram(setup, homs, &phi)?;
        let alg = HeckeAlgebra::from_group(setup.tensor_space().model().group())?;
        let hecke = hecke_gram(setup, homs, &PrincipalSeries::new(&alg, nu)?)?;
        Ok((signature(&lie)?, signature(&hecke)?))
    };
    match run() {
        Ok((a, b)) if a == b => CheckResult { parameters: format!("{}; signature {a}", res.parameters), ..res },
        Ok((a, b)) => res.with(false, || format!("Lie-side signature {a}, Hecke-side signature {b}")),
        Err(e) => res.with(false, || e.to_string()),
    }
}

fn signature(m: &ExactMatrix<GaussRational>) -> Result<String> {
    if !m.entries().iter().all(|x| x.im.is_zero()) {
        return Err(Error::Other("Gram matrix is not real".into()));
    }
    let s = m.map(|x| x.re.clone()).signature()?;
    Ok(format!("({},{},{})", s.pos, s.neg, s.zero))
}

/// Hermitian and positivity transfer at the rank-one points `nus`.
pub fn verify_transfer(setup: &OdaSetup, homs: &[EquivariantHom], nus: &[Vec<Rational>]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for nu in nus {
        out.push(hermitian_transfer_check(setup, homs, nu));
        out.push(positivity_transfer_check(setup, homs, nu));
    }
    out
}

fn show_kernel(m: &ExactMatrix<GaussRational>) -> String {
    let vs: Vec<String> = m
        .nullspace()
        .iter()
        .map(|v| format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("{{{}}}", vs.join(", "))
}
