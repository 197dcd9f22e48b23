//! Matrix realizations of the complexified Lie algebras of `GL(n,R)`,
//! `U(p,q)`, `Sp(2n,R)` and `O(p,q)` on the defining representation.
//!
//! Entries live in `Q(i)`. The Cartan involution `θ` is `X ↦ -Xᵀ` for
//! `GL(n,R)` and `Ad(ξ)` otherwise, and `τ` is the conjugation fixing the
//! real form. The form `κ` is `tr(XY)` on `gl(n)` and `½tr(XY)` on
//! `so` and `sp`.

mod exp;
mod omega;
pub mod roots;
mod util;


pub use exp::exp_pi_half;
pub use omega::{flip, omega_k_on_vv, omega_on_vv, trivial_projection};
pub use roots::RestrictedRootVector;
pub use util::{combine, complexify, conj, diagonal, elementary, flatten, independent_indices, kernel_combinations, unflatten};
#[cfg(test)]
pub(crate) use tests::groups as test_groups;

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::exact_kernel::{int, rat, ExactMatrix, Field, GaussRational, Rational, Ring};
use crate::root_data::{GroupDescriptor, GroupFamily, WeylElement};

pub type CMatrix = ExactMatrix<GaussRational>;

/// Complex type of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Gl,
    So,
    Sp,
}

/// An element of the self-dual basis together with its `κ`-dual.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub matrix: CMatrix,
    pub dual: CMatrix,
    pub in_k: bool,
}

/// A one-dimensional character `g ↦ det(g|V₊)^{m_p} det(g|V₋)^{m_q}` of `K`,
/// where `V±` are the `±1` eigenspaces of `ξ` (all of `V` for `GL`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub m_p: i64,
    pub m_q: i64,
}

#[derive(Clone, Debug)]
pub struct LieModel {
    group: GroupDescriptor,
    kind: Kind,
    n: usize,
    j: Option<CMatrix>,
    jh: Option<CMatrix>,
    kappa_scale: Rational,
    xi: Option<CMatrix>,
    basis: Vec<BasisElement>,
    a: Vec<CMatrix>,
    m: Vec<CMatrix>,
    m_finite: Vec<CMatrix>,
    simple: Vec<RestrictedRootVector>,
    extra: Option<CMatrix>,
}

fn one() -> GaussRational {
    GaussRational::real(int(1))
}

impl LieModel {
    pub fn build(g: &GroupDescriptor) -> Result<Self> {
        let n = g.dim_v();
        let k = g.real_rank();
        let (p, q) = (g.p, g.q);
        let signs: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
        let jh = diagonal(&signs);
        let (kind, j, jh, xi) = match g.family {
            GroupFamily::GL => (Kind::Gl, None, None, None),
            GroupFamily::U => (Kind::Gl, Some(jh.clone()), Some(jh.clone()), Some(jh)),
            GroupFamily::O => (Kind::So, Some(jh.clone()), Some(jh.clone()), Some(jh)),
            GroupFamily::Sp => {
                let mut js = CMatrix::zeros(n, n);
                for i in 0..p {
                    js.set(i, n - 1 - i, one());
                    js.set(n - 1 - i, i, -one());
                }
                (Kind::Sp, Some(js), Some(jh.clone()), Some(jh))
            }
        };
        let kappa_scale = if kind == Kind::Gl { int(1) } else { rat(1, 2) };
        let mut model = LieModel {
            group: *g,
            kind,
            n,
            j,
            jh,
            kappa_scale,
            xi,
            basis: Vec::new(),
            a: Vec::new(),
            m: Vec::new(),
            m_finite: Vec::new(),
            simple: Vec::new(),
            extra: None,
        };
        let all = model.g_basis();
        let k_part = model.eigen_part(&all, true);
        let p_part = model.eigen_part(&all, false);
        for (part, in_k) in [(k_part, true), (p_part, false)] {
            let duals = model.dual_basis(&part)?;
            model.basis.extend(part.into_iter().zip(duals).map(|(matrix, dual)| BasisElement { matrix, dual, in_k }));
        }
        model.a = match g.family {
            GroupFamily::GL => (0..n).map(|i| elementary(n, i, i)).collect(),
            _ => (1..=q)
                .map(|jx| {
                    let (a, b) = (p - jx, p + jx - 1);
                    elementary(n, a, b).add(&elementary(n, b, a))
                })
                .collect(),
        };
        let k_basis: Vec<CMatrix> = model.k_basis();
        let a = model.a.clone();
        model.m = kernel_combinations(&k_basis, |x| a.iter().map(|h| h.commutator(x)).collect());
        let pair_flip = |jx: usize| {
            let mut d = vec![1; n];
            d[p - jx] = -1;
            d[p + jx - 1] = -1;
            diagonal(&d)
        };
        model.m_finite = match g.family {
            GroupFamily::GL => (0..n)
                .map(|i| {
                    let mut d = vec![1; n];
                    d[i] = -1;
                    diagonal(&d)
                })
                .collect(),
            GroupFamily::U => Vec::new(),
            GroupFamily::Sp => (1..=q).map(pair_flip).collect(),
            GroupFamily::O => {
                let mut gens: Vec<CMatrix> = (1..=q).map(pair_flip).collect();
                if p > q {
                    let mut d = vec![1; n];
                    d[0] = -1;
                    gens.push(diagonal(&d));
                }
                gens
            }
        };
        if g.family == GroupFamily::O && p == q {
            let mut d = vec![1; n];
            d[n - 1] = -1;
            model.extra = Some(diagonal(&d));
        }
        let simple = roots::simple_restricted_roots(g, k);
        model.simple = simple.iter().map(|alpha| roots::root_vector(&model, alpha)).collect::<Result<_>>()?;
        Ok(model)
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim_v(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// Defining bilinear form (`None` for `GL`); for `U(p,q)` the Hermitian form.
    pub fn form(&self) -> Option<&CMatrix> {
        self.j.as_ref()
    }

    pub fn hermitian_form(&self) -> Option<&CMatrix> {
        self.jh.as_ref()
    }

    pub fn kappa_scale(&self) -> &Rational {
        &self.kappa_scale
    }

    pub fn xi(&self) -> Option<&CMatrix> {
        self.xi.as_ref()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn k_basis(&self) -> Vec<CMatrix> {
        self.basis.iter().filter(|b| b.in_k).map(|b| b.matrix.clone()).collect()
    }

    pub fn p_basis(&self) -> Vec<CMatrix> {
        self.basis.iter().filter(|b| !b.in_k).map(|b| b.matrix.clone()).collect()
    }

    /// `H_1, …, H_k` spanning `a`.
    pub fn a(&self) -> &[CMatrix] {
        &self.a
    }

    /// Basis of the Lie algebra of `M`.
    pub fn m(&self) -> &[CMatrix] {
        &self.m
    }

    /// Generators of `M` modulo its identity component.
    pub fn m_finite(&self) -> &[CMatrix] {
        &self.m_finite
    }

    /// Root data for the simple roots, in Hecke generator order.
    pub fn simple_roots(&self) -> &[RestrictedRootVector] {
        &self.simple
    }

    /// The element of `K` inducing `ε_k ↦ -ε_k` for `O(q,q)`.
    pub fn extra_component(&self) -> Option<&CMatrix> {
        self.extra.as_ref()
    }

    pub fn kappa(&self, x: &CMatrix, y: &CMatrix) -> GaussRational {
        x.mul(y).trace() * GaussRational::real(self.kappa_scale.clone())
    }

    pub fn contains(&self, x: &CMatrix) -> bool {
        match &self.j {
            Some(j) if self.kind != Kind::Gl => x.transpose().mul(j).add(&j.mul(x)).is_zero(),
            _ => true,
        }
    }

    pub fn theta(&self, x: &CMatrix) -> CMatrix {
        match &self.xi {
            None => x.transpose().neg(),
            Some(xi) => xi.mul(x).mul(xi),
        }
    }

    /// Conjugation of `g` with respect to the real form.
    pub fn tau(&self, x: &CMatrix) -> CMatrix {
        match self.group.family {
            GroupFamily::GL | GroupFamily::O => conj(x),
            GroupFamily::U | GroupFamily::Sp => {
                let jh = self.jh.as_ref().expect("hermitian form");
                jh.mul(&x.conj_transpose()).mul(jh).neg()
            }
        }
    }

    pub fn is_real(&self, x: &CMatrix) -> bool {
        self.tau(x) == *x
    }

    /// `Σ_E E E*` acting on `V`.
    pub fn casimir(&self) -> CMatrix {
        self.casimir_of(self.basis.iter())
    }

    /// `Σ_{E ∈ k} E E*` acting on `V`.
    pub fn casimir_k(&self) -> CMatrix {
        self.casimir_of(self.basis.iter().filter(|b| b.in_k))
    }

    fn casimir_of<'a>(&self, it: impl Iterator<Item = &'a BasisElement>) -> CMatrix {
        let mut c = CMatrix::zeros(self.n, self.n);
        for b in it {
            c = c.add(&b.matrix.mul(&b.dual));
        }
        c
    }

    /// `V₋`, the `-1` eigenspace of `ξ`, as coordinate indices.
    fn minus_block(&self) -> std::ops::Range<usize> {
        match self.group.family {
            GroupFamily::GL => 0..0,
            _ => self.group.p..self.n,
        }
    }

    fn plus_block(&self) -> std::ops::Range<usize> {
        match self.group.family {
            GroupFamily::GL => 0..self.n,
            _ => 0..self.group.p,
        }
    }

    /// The character `μ₀` that makes `(μ₀*⊗V^{⊗k})^M` regular.
    pub fn mu0(&self) -> Character {
        match self.group.family {
            GroupFamily::GL => Character { m_p: 1, m_q: 0 },
            _ => Character { m_p: 0, m_q: 1 },
        }
    }

    /// Value of a character on an element of `K`.
    pub fn character_value(&self, mu: Character, g: &CMatrix) -> GaussRational {
        let block_det = |r: std::ops::Range<usize>| {
            let idx: Vec<usize> = r.collect();
            ExactMatrix::from_fn(idx.len(), idx.len(), |a, b| g.get(idx[a], idx[b]).clone()).determinant()
        };
        let pow = |x: GaussRational, m: i64| {
            let base = if m < 0 { x.inv().expect("unit") } else { x };
            (0..m.unsigned_abs()).fold(one(), |acc, _| acc * base.clone())
        };
        let mut v = one();
        if mu.m_p != 0 {
            v = v * pow(block_det(self.plus_block()), mu.m_p);
        }
        if mu.m_q != 0 && !self.minus_block().is_empty() {
            v = v * pow(block_det(self.minus_block()), mu.m_q);
        }
        v
    }

    /// Differential of a character on `k`.
    pub fn character_differential(&self, mu: Character, x: &CMatrix) -> GaussRational {
        let tr = |r: std::ops::Range<usize>| r.fold(GaussRational::default(), |acc, i| acc + x.get(i, i).clone());
        let mut v = tr(self.plus_block()) * GaussRational::from_int(mu.m_p);
        if !self.minus_block().is_empty() {
            v = v + tr(self.minus_block()) * GaussRational::from_int(mu.m_q);
        }
        v
    }

    /// `Q_μ = C^k − Σ_{E∈k} μ(E) E*` on `V`.
    pub fn q_mu(&self, mu: Character) -> CMatrix {
        let mut q = self.casimir_k();
        for b in self.basis.iter().filter(|b| b.in_k) {
            let c = self.character_differential(mu, &b.matrix);
            if !c.is_zero() {
                q = q.sub(&b.dual.scale(&c));
            }
        }
        q
    }

    /// The unique `(r, c)` with `Q_μ − r = c ξ` on `V`.
    pub fn q_mu_parameters(&self, mu: Character) -> Result<(Rational, Rational)> {
        let xi = self.xi.as_ref().ok_or_else(|| Error::UnsupportedGroup("no ξ for GL(n,R)".into()))?;
        let q = self.q_mu(mu);
        let (ip, im) = (0, self.n - 1);
        let plus = q.get(ip, ip).clone();
        let minus = q.get(im, im).clone();
        let two = GaussRational::from_int(2);
        let half = two.inv().unwrap();
        let r = (plus.clone() + minus.clone()) * half.clone();
        let c = (plus - minus) * half;
        let id = CMatrix::identity(self.n);
        if q != id.scale(&r).add(&xi.scale(&c)) || !r.is_real() || !c.is_real() {
            return Err(Error::Other(format!("Q_mu is not of the form r + c·ξ for {}", self.group)));
        }
        Ok((r.re, c.re))
    }

    /// The signed permutation of `a` induced by `Ad(g)`, if `g` normalizes `a`.
    pub fn induced_weyl(&self, g: &CMatrix) -> Option<WeylElement> {
        let ginv = g.inverse().ok()?;
        let mut images = Vec::new();
        for h in &self.a {
            let img = g.mul(h).mul(&ginv);
            let pos = self.a.iter().position(|x| *x == img).map(|j| j as i32 + 1);
            let neg = self.a.iter().position(|x| *x == img.neg()).map(|j| -(j as i32 + 1));
            images.push(pos.or(neg)?);
        }
        Some(WeylElement::from_images(images))
    }

    fn g_basis(&self) -> Vec<CMatrix> {
        let n = self.n;
        let all: Vec<CMatrix> = (0..n * n).map(|t| elementary(n, t / n, t % n)).collect();
        if self.kind == Kind::Gl {
            return all;
        }
        let j = self.j.clone().expect("form");
        kernel_combinations(&all, |x| vec![x.transpose().mul(&j).add(&j.mul(x))])
    }

    fn eigen_part(&self, all: &[CMatrix], plus: bool) -> Vec<CMatrix> {
        let half = GaussRational::real(rat(1, 2));
        let cands: Vec<CMatrix> = all
            .iter()
            .map(|x| {
                let t = self.theta(x);
                if plus { x.add(&t).scale(&half) } else { x.sub(&t).scale(&half) }
            })
            .collect();
        let flat: Vec<Vec<GaussRational>> = cands.iter().map(flatten).collect();
        independent_indices(&flat).into_iter().map(|i| cands[i].clone()).collect()
    }

    fn dual_basis(&self, part: &[CMatrix]) -> Result<Vec<CMatrix>> {
        if part.is_empty() {
            return Ok(Vec::new());
        }
        let gram = ExactMatrix::from_fn(part.len(), part.len(), |i, j| self.kappa(&part[i], &part[j]));
        let inv = gram.inverse().map_err(|_| Error::Other("κ is degenerate".into()))?;
        Ok((0..part.len()).map(|i| combine(part, &inv.column(i))).collect())
    }
}
