use std::collections::BTreeMap;

use num_traits::Zero;

use super::pbw::{IwasawaBasis, Letter, UEAElement, Word};
use crate::error::{Error, Result};
use crate::exact_kernel::{ExactMatrix, GaussRational, NuPoly, Rational, Ring};
use crate::hecke_algebra::HeckeAlgebra;
use crate::lie_models::CMatrix;
use crate::principal_series::PrincipalSeries;

/// `U(g)⊗_{U(k)}1` in degrees `≤ d`, realized on normal-ordered words in
/// `n`- and `a`-letters.
#[derive(Clone, Debug)]
pub struct TruncatedXR {
    basis: IwasawaBasis,
    d: usize,
}

impl TruncatedXR {
    pub fn new(basis: IwasawaBasis, d: usize) -> Self {
        Self { basis, d }
    }

    pub fn basis(&self) -> &IwasawaBasis {
        &self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.d
    }

    /// All normal-ordered `n`/`a` words of length `≤ d`.
    pub fn words(&self) -> Vec<Word> {
        let letters: Vec<usize> =
            (0..self.basis.dim()).filter(|&i| self.basis.lie().letter_kind(i) != Letter::K).collect();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..self.d {
            let mut next = Vec::new();
            for w in &layer {
                for &x in &letters {
                    if w.last().is_none_or(|&l| l <= x) {
                        let mut v = w.clone();
                        v.push(x);
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Coset representative in normal form.
    pub fn reduce(&self, u: &UEAElement) -> Result<UEAElement> {
        if u.degree() > self.d {
            return Err(Error::Other(format!("degree {} exceeds the truncation {}", u.degree(), self.d)));
        }
        Ok(self.basis.lie().coset_reduce(u))
    }

    /// Left multiplication by a matrix of `g` followed by reduction. The
    /// result may have degree `d + 1`.
    pub fn left_mul(&self, x: &CMatrix, u: &UEAElement) -> Result<UEAElement> {
        let e = self.basis.embed(x)?;
        Ok(self.basis.lie().coset_reduce(&e.concat(u)))
    }

    /// Symmetrization of a product of matrices of `g`, then reduction.
    pub fn symmetrized(&self, factors: &[CMatrix]) -> Result<UEAElement> {
        let embedded: Vec<UEAElement> = factors.iter().map(|x| self.basis.embed(x)).collect::<Result<_>>()?;
        let mut perm: Vec<usize> = (0..factors.len()).collect();
        let mut total = UEAElement::zero();
        let mut count = 0i64;
        loop {
            let prod = perm.iter().fold(UEAElement::one(), |acc, &i| acc.concat(&embedded[i]));
            total = total.add(&self.basis.lie().coset_reduce(&prod));
            count += 1;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(total.scale(&GaussRational::real(Rational::new(1.into(), count.into()))))
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A polynomial with Gaussian rational coefficients; a key lists the
/// variable indices of a monomial in nondecreasing order.
pub type APoly = BTreeMap<Vec<usize>, GaussRational>;

pub(crate) fn poly_add_term(p: &mut APoly, mut m: Vec<usize>, c: GaussRational) {
    if c.is_zero() {
        return;
    }
    m.sort_unstable();
    let e = p.entry(m.clone()).or_default();
    *e = e.clone() + c;
    if e.is_zero() {
        p.remove(&m);
    }
}

/// `γ∘`: the pure `a`-words of a normal form, as a polynomial in the
/// coordinates `H_1, …, H_k`.
pub fn gamma0(basis: &IwasawaBasis, u: &UEAElement) -> APoly {
    let a = basis.a_letters();
    let mut out = APoly::new();
    for (w, c) in &u.terms {
        if w.iter().all(|x| basis.lie().letter_kind(*x) == Letter::A) {
            let m = w.iter().map(|x| a.iter().position(|y| y == x).expect("a-letter")).collect();
            poly_add_term(&mut out, m, c.clone());
        }
    }
    out
}

/// An element `h̃⊗1` of `H⊗_{C[W]}1`, stored as the polynomial `h` in the
/// Hecke coordinates `ε_1, …, ε_k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XElement {
    pub poly: APoly,
}

impl XElement {
    pub fn one() -> Self {
        let mut poly = APoly::new();
        poly.insert(Vec::new(), GaussRational::from_int(1));
        Self { poly }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut poly = self.poly.clone();
        for (m, c) in &o.poly {
            poly_add_term(&mut poly, m.clone(), c.clone());
        }
        Self { poly }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        let mut poly = APoly::new();
        for (m, x) in &self.poly {
            poly_add_term(&mut poly, m.clone(), x.clone() * c.clone());
        }
        Self { poly }
    }

    /// Multiplication by `ε_i`.
    pub fn mul_eps(&self, i: usize) -> Self {
        let mut poly = APoly::new();
        for (m, c) in &self.poly {
            let mut m = m.clone();
            m.push(i);
            poly_add_term(&mut poly, m, c.clone());
        }
        Self { poly }
    }

    /// `w·(h̃⊗1) = (w·h)~⊗1`, with `w` acting on the coordinates by a
    /// signed permutation.
    pub fn act_weyl(&self, w: &crate::root_data::WeylElement) -> Self {
        let images = w.images();
        let mut poly = APoly::new();
        for (m, c) in &self.poly {
            let mut sign = 1i64;
            let mut mm = Vec::with_capacity(m.len());
            for &i in m {
                let t = images[i];
                if t < 0 {
                    sign = -sign;
                }
                mm.push(t.unsigned_abs() as usize - 1);
            }
            poly_add_term(&mut poly, mm, c.clone() * GaussRational::from_int(sign));
        }
        Self { poly }
    }

    pub fn degree(&self) -> usize {
        self.poly.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Image in `X(ν)` under `h̃⊗1 ↦ h̃·Σ_w w⊗1`, as real and imaginary
    /// parts. The factors of each monomial are applied in the given order
    /// of its key (nondecreasing unless `order` permutes them).
    pub fn evaluate(&self, ps: &PrincipalSeries) -> (Vec<Rational>, Vec<Rational>) {
        self.evaluate_ordered(ps, |m| m.to_vec())
    }

    pub fn evaluate_ordered(
        &self,
        ps: &PrincipalSeries,
        order: impl Fn(&[usize]) -> Vec<usize>,
    ) -> (Vec<Rational>, Vec<Rational>) {
        let lifts = lift_matrices(ps);
        let v = ps.spherical_vector();
        let mut re = vec![Rational::zero(); v.len()];
        let mut im = vec![Rational::zero(); v.len()];
        for (m, c) in &self.poly {
            let mut t = v.clone();
            for &i in order(m).iter().rev() {
                t = lifts[i].apply(&t);
            }
            for (k, x) in t.iter().enumerate() {
                re[k] += &c.re * x;
                im[k] += &c.im * x;
            }
        }
        (re, im)
    }
}

/// Matrices of the lifts `ε̃_i` on `X(ν)`.
pub fn lift_matrices(ps: &PrincipalSeries) -> Vec<ExactMatrix<Rational>> {
    let alg: &HeckeAlgebra = ps.algebra();
    (0..alg.k()).map(|i| ps.act(&alg.drinfeld_lift(&NuPoly::var(i)))).collect()
}

/// `γ(x⊗1) = γ∘(x)~⊗1`, with `a` identified with the Hecke coordinates by
/// `H_j ↦ Σ_i iota[j][i] ε_i`, after substituting `H_j ↦ H_j + shift[j]`.
pub fn gamma_map(basis: &IwasawaBasis, iota: &[Vec<GaussRational>], shift: &[GaussRational], x: &UEAElement) -> XElement {
    let mut out = XElement::default();
    for (m, c) in gamma0(basis, x) {
        let mut partial = XElement::one().scale(&c);
        for &j in &m {
            let mut next = partial.scale(&shift[j]);
            for (i, a) in iota[j].iter().enumerate() {
                if !a.is_zero() {
                    next = next.add(&partial.mul_eps(i).scale(a));
                }
            }
            partial = next;
        }
        out = out.add(&partial);
    }
    out
}

impl std::fmt::Display for XElement {
    /// Monomials as `c*e1*e2` with 1-based variable indices.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .poly
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m.iter().map(|i| format!("e{}", i + 1)).collect();
                match (vars.is_empty(), c == &GaussRational::from_int(1)) {
                    (true, _) => format!("{c}"),
                    (false, true) => vars.join("*"),
                    (false, false) => format!("({c})*{}", vars.join("*")),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
