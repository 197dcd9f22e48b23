//! Principal series modules `X₁(ν) = H ⊗_{S(a)} ℂ_ν`.
//!
//! The basis is `w ⊗ 1` for `w ∈ W`, ordered as [`HeckeAlgebra::weyl`].
//! Group elements act by left translation. To compute `ε_i·(w ⊗ 1)` the form
//! `ε_i` is pushed rightward through a reduced word of `w` with
//! `q·s = s·(s·q) + c(α)·Δ_α(q)` and then evaluated at `ν`. Matrix entries
//! are affine in `ν`, so they are built once as polynomials.

mod form;

pub use form::{
    hermitian_form, is_invariant_form, scan_line, spherical_quotient, unitarity_scan, HermitianForm,
    ScanRecord, SphericalQuotient,
};

use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

use crate::exact_kernel::{int, rat, Echelon, ExactMatrix, NuPoly, Rational};
use crate::hecke_algebra::{HeckeAlgebra, HeckeElement};
use crate::report::CheckResult;
use crate::root_data::WeylElement;

/// Modules are built for rank at most this.
pub const MODULE_RANK_BOUND: usize = 4;

/// The principal series of one algebra with `ν` left symbolic.
#[derive(Clone, Debug)]
pub struct PrincipalSeriesFamily {
    alg: HeckeAlgebra,
    index: HashMap<WeylElement, usize>,
    eps: Vec<ExactMatrix<NuPoly>>,
    simple: Vec<ExactMatrix<Rational>>,
}

/// `X₁(ν)` at a fixed `ν`.
#[derive(Clone, Debug)]
pub struct PrincipalSeries {
    family: PrincipalSeriesFamily,
    nu: Vec<Rational>,
    eps: Vec<ExactMatrix<Rational>>,
}

impl PrincipalSeriesFamily {
    pub fn new(alg: &HeckeAlgebra) -> crate::Result<Self> {
        if alg.k() > MODULE_RANK_BOUND {
            return Err(crate::Error::RankTooLarge { rank: alg.k(), bound: MODULE_RANK_BOUND });
        }
        let weyl = alg.weyl();
        let index: HashMap<WeylElement, usize> = weyl.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = weyl.len();
        let mut eps = Vec::new();
        for i in 0..alg.k() {
            let mut m = ExactMatrix::<NuPoly>::zeros(n, n);
            for (col, w) in weyl.iter().enumerate() {
                let mut out = BTreeMap::new();
                push_right(alg, WeylElement::identity(alg.k()), NuPoly::var(i), alg.reduced_word(w), &mut out);
                for (u, q) in out {
                    m.add_at(index[&u], col, q);
                }
            }
            eps.push(m);
        }
        let simple = alg.simple().iter().map(|sp| left_translation(&index, weyl, &sp.reflection)).collect();
        Ok(Self { alg: alg.clone(), index, eps, simple })
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[w]
    }

    /// `π(ε_i)` with entries polynomial in `ν`.
    pub fn eps_symbolic(&self, i: usize) -> &ExactMatrix<NuPoly> {
        &self.eps[i]
    }

    pub fn at(&self, nu: &[Rational]) -> PrincipalSeries {
        assert_eq!(nu.len(), self.alg.k(), "ν has the wrong length");
        let eps = self.eps.iter().map(|m| m.map(|p| p.eval(nu))).collect();
        PrincipalSeries { family: self.clone(), nu: nu.to_vec(), eps }
    }

    /// `ρ_c = ½ Σ_{β>0} c(β) β`.
    pub fn rho(&self) -> Vec<Rational> {
        let mut r = vec![Rational::zero(); self.alg.k()];
        for rp in self.alg.positive() {
            for (x, &b) in r.iter_mut().zip(&rp.root) {
                *x += &rp.c * int(b) * rat(1, 2);
            }
        }
        r
    }
}

/// Accumulates `q·s_{w0} s_{w1}…` in the form `Σ u·q_u`.
fn push_right(
    alg: &HeckeAlgebra,
    prefix: WeylElement,
    q: NuPoly,
    word: &[usize],
    out: &mut BTreeMap<WeylElement, NuPoly>,
) {
    if q.is_zero() {
        return;
    }
    let Some((&i, rest)) = word.split_first() else {
        let e = out.entry(prefix).or_default();
        *e = std::mem::take(e) + q;
        return;
    };
    let sp = &alg.simple()[i];
    if q.is_constant() {
        push_right(alg, prefix.compose(&sp.reflection), q, rest, out);
        return;
    }
    let alpha: Vec<Rational> = sp.root.iter().map(|&a| int(a)).collect();
    let d = q.demazure(sp.reflection.images(), &alpha).scale(&sp.c);
    push_right(alg, prefix.compose(&sp.reflection), q.signed_permute(sp.reflection.images()), rest, out);
    push_right(alg, prefix, d, rest, out);
}

fn left_translation(index: &HashMap<WeylElement, usize>, weyl: &[WeylElement], g: &WeylElement) -> ExactMatrix<Rational> {
    let n = weyl.len();
    let mut m = ExactMatrix::zeros(n, n);
    for (col, w) in weyl.iter().enumerate() {
        m.set(index[&g.compose(w)], col, int(1));
    }
    m
}

impl PrincipalSeries {
    pub fn new(alg: &HeckeAlgebra, nu: &[Rational]) -> crate::Result<Self> {
        Ok(PrincipalSeriesFamily::new(alg)?.at(nu))
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.family.alg
    }

    pub fn family(&self) -> &PrincipalSeriesFamily {
        &self.family
    }

    pub fn nu(&self) -> &[Rational] {
        &self.nu
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }

    pub fn eps(&self, i: usize) -> &ExactMatrix<Rational> {
        &self.eps[i]
    }

    pub fn simple(&self, i: usize) -> &ExactMatrix<Rational> {
        &self.family.simple[i]
    }

    pub fn group(&self, w: &WeylElement) -> ExactMatrix<Rational> {
        left_translation(&self.family.index, self.algebra().weyl(), w)
    }

    /// `p(π(ε_1), …, π(ε_k))`
    pub fn poly(&self, p: &NuPoly) -> ExactMatrix<Rational> {
        let n = self.dim();
        let mut out = ExactMatrix::zeros(n, n);
        for (m, c) in p.terms() {
            let mut t = ExactMatrix::identity(n).scale(c);
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&self.eps[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// `π(x)` for an algebra element.
    pub fn act(&self, x: &HeckeElement) -> ExactMatrix<Rational> {
        let n = self.dim();
        let mut out = ExactMatrix::zeros(n, n);
        for (w, p) in x.terms() {
            out = out.add(&self.poly(p).mul(&self.group(w)));
        }
        out
    }

    /// Coordinates of `1 ⊗ 1`.
    pub fn cyclic_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[self.family.index[&WeylElement::identity(self.algebra().k())]] = int(1);
        v
    }

    /// Coordinates of `Σ_w w ⊗ 1`.
    pub fn spherical_vector(&self) -> Vec<Rational> {
        vec![int(1); self.dim()]
    }

    /// Dimension of the span of `1 ⊗ 1` under the generators.
    pub fn krylov_dimension(&self) -> usize {
        let mut mats: Vec<&ExactMatrix<Rational>> = self.eps.iter().collect();
        mats.extend(self.family.simple.iter());
        krylov_dimension(&self.cyclic_vector(), &mats)
    }

    /// Defining relations on the matrices of the generators.
    pub fn verify(&self) -> Vec<CheckResult> {
        let alg = self.algebra();
        let g = alg.label().to_string();
        let nu: Vec<String> = self.nu.iter().map(|x| x.to_string()).collect();
        let params = format!("nu={}", nu.join(";"));
        let r = |name: &str| CheckResult::new(name, g.clone(), params.clone());
        let k = alg.k();
        let n = self.dim();
        let id = ExactMatrix::<Rational>::identity(n);
        let mut out = Vec::new();
        let mut ok = true;
        for i in 0..k {
            for j in i + 1..k {
                ok &= self.eps[i].commutator(&self.eps[j]).is_zero();
            }
        }
        out.push(r("ps_eps_commute").with(ok, || "commutator nonzero".into()));
        let mut ok = true;
        for (a, sp) in alg.simple().iter().enumerate() {
            let s = &self.family.simple[a];
            ok &= s.mul(s) == id;
            for j in 0..k {
                let sf = sp.reflection.act_poly(&NuPoly::var(j));
                let lhs = s.mul(&self.eps[j]).sub(&self.poly(&sf).mul(s));
                ok &= lhs == id.scale(&(&sp.c * int(sp.root[j])));
            }
        }
        out.push(r("ps_cross_relation").with(ok, || "cross relation fails".into()));
        let v = self.cyclic_vector();
        let ok = (0..k).all(|i| self.eps[i].apply(&v) == v.iter().map(|x| x * &self.nu[i]).collect::<Vec<_>>());
        out.push(r("ps_cyclic_weight").with(ok, || "ε_i(1⊗1) != ν_i(1⊗1)".into()));
        let kd = self.krylov_dimension();
        out.push(r("ps_krylov_cyclic").with(kd == n, || format!("span has dimension {kd} of {n}")));
        let e = WeylElement::identity(k);
        let ok = alg.weyl().iter().all(|w| {
            let tr = self.group(w).trace();
            if *w == e { tr == int(n as i64) } else { tr.is_zero() }
        });
        out.push(r("ps_regular_character").with(ok, || "W-character is not regular".into()));
        let mut ok = true;
        for i in 0..k {
            for j in i + 1..k {
                let (fi, fj) = (NuPoly::var(i), NuPoly::var(j));
                let lhs = self.act(&alg.drinfeld_lift(&fi)).commutator(&self.act(&alg.drinfeld_lift(&fj)));
                let rhs = self.act(&alg.drinfeld_correction(&fi)).commutator(&self.act(&alg.drinfeld_correction(&fj)));
                ok &= lhs.add(&rhs).is_zero();
            }
        }
        out.push(r("ps_drinfeld_commutator").with(ok, || "[f~,g~] != -[A_f,A_g]".into()));
        out
    }
}

/// Dimension of the smallest subspace containing `v` and stable under `mats`.
pub fn krylov_dimension(v: &[Rational], mats: &[&ExactMatrix<Rational>]) -> usize {
    let mut span = Echelon::new();
    let mut queue = vec![v.to_vec()];
    while let Some(x) = queue.pop() {
        if span.insert(&x) {
            let x = span.last().to_vec();
            queue.extend(mats.iter().map(|m| m.apply(&x)));
        }
    }
    span.len()
}

#[cfg(test)]
mod tests;
