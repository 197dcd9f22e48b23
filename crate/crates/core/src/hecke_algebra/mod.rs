//! Graded affine Hecke algebras `H(Ψ, c)` in PBW form.
//!
//! Elements are stored as `Σ_w p_w·w` with `p_w ∈ S(V*) = ℚ[ε_1..ε_k]`.
//! Multiplication moves group elements rightward with the rule
//! `s·p = (s·p)·s + c(α)·Δ_α(p)`, where `Δ_α` is the divided difference
//! normalized so that a linear form `f` goes to `f(α)`.

mod element;
mod text;
mod verify;

pub use element::HeckeElement;
pub use verify::{random_element, verify_relations, verify_star_random};

use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_kernel::{int, rat, NuPoly, Rational};
use crate::root_data::{is_positive, table_one, Family, GroupDescriptor, HeckeSpec, RootDatum, WeylElement};

/// A `W`-invariant function on the positive roots of `Φ∘`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterFunction {
    values: BTreeMap<Vec<i64>, Rational>,
}

impl ParameterFunction {
    pub fn from_fn(datum: &RootDatum, f: impl Fn(&[i64]) -> Rational) -> Self {
        let values = datum.positive_roots().iter().map(|r| (r.clone(), f(r))).collect();
        Self { values }
    }

    pub fn constant(datum: &RootDatum, c: Rational) -> Self {
        Self::from_fn(datum, |_| c.clone())
    }

    /// `short` on roots `±e_i±e_j`, `long` on roots proportional to `e_i`.
    pub fn short_long(datum: &RootDatum, short: Rational, long: Rational) -> Self {
        Self::from_fn(datum, |r| {
            if r.iter().filter(|&&x| x != 0).count() == 2 {
                short.clone()
            } else {
                long.clone()
            }
        })
    }

    pub fn get(&self, root: &[i64]) -> Option<&Rational> {
        if is_positive(root) {
            self.values.get(root)
        } else {
            self.values.get(&root.iter().map(|x| -x).collect::<Vec<_>>())
        }
    }

    /// Multiplies every value by `lambda`; `f ↦ lambda·f` identifies the
    /// algebras for `c` and `lambda·c`.
    pub fn rescale(&self, lambda: &Rational) -> Self {
        Self { values: self.values.iter().map(|(r, c)| (r.clone(), c * lambda)).collect() }
    }

    pub fn values(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.values.iter()
    }

    fn check(&self, datum: &RootDatum) -> Result<()> {
        for r in datum.positive_roots() {
            if !self.values.contains_key(r) {
                return Err(Error::NotInvariant(format!("no value on root {r:?}")));
            }
        }
        for s in datum.simple_reflections() {
            for (r, c) in &self.values {
                let img = s.apply_int(r);
                match self.get(&img) {
                    Some(d) if d == c => {}
                    _ => return Err(Error::NotInvariant(format!("c({r:?}) != c({img:?})"))),
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RootParam {
    pub root: Vec<i64>,
    pub c: Rational,
    pub reflection: WeylElement,
}

/// `H(Ψ, c)` for a classical root datum.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    datum: RootDatum,
    params: ParameterFunction,
    positive: Vec<RootParam>,
    simple: Vec<RootParam>,
    weyl: Vec<WeylElement>,
    words: HashMap<WeylElement, Vec<usize>>,
    names: Vec<String>,
    label: String,
    star_eps: Vec<HeckeElement>,
}

impl HeckeAlgebra {
    pub fn new(datum: RootDatum, params: ParameterFunction) -> Result<Self> {
        params.check(&datum)?;
        let mk = |r: &Vec<i64>| RootParam {
            root: r.clone(),
            c: params.get(r).unwrap().clone(),
            reflection: WeylElement::reflection(r),
        };
        let positive: Vec<RootParam> = datum.positive_roots().iter().map(mk).collect();
        let simple: Vec<RootParam> = datum.simple_roots().iter().map(mk).collect();
        let weyl = datum.weyl_enumerate();
        let words = weyl.iter().map(|w| (w.clone(), datum.reduced_word(w))).collect();
        let k = datum.k();
        let mut names: Vec<String> = (1..k).map(|i| format!("s{i}")).collect();
        match datum.reduced_family() {
            Family::A => {}
            Family::D => names.push("sd".into()),
            _ => names.push("sbar".into()),
        }
        let label = format!("H({datum})");
        let mut alg = Self { datum, params, positive, simple, weyl, words, names, label, star_eps: Vec::new() };
        alg.star_eps = (0..k).map(|i| alg.star_linear(&alg.eps_coeffs(i))).collect();
        Ok(alg)
    }

    /// `H_n`: type `A_{n-1}` on `n` coordinates, `c ≡ 1`.
    pub fn type_a(n: usize) -> Result<Self> {
        let d = RootDatum::new(Family::A, n)?;
        let p = ParameterFunction::constant(&d, int(1));
        let mut a = Self::new(d, p)?;
        a.label = format!("H_{n}");
        Ok(a)
    }

    /// `H̃_k(c)`: type `C_k`, parameter 1 on `±e_i±e_j` and `c` on `±2e_i`.
    pub fn type_c(k: usize, c: Rational) -> Result<Self> {
        let d = RootDatum::new(Family::C, k)?;
        let p = ParameterFunction::short_long(&d, int(1), c.clone());
        let mut a = Self::new(d, p)?;
        a.label = format!("H~_{k}({c})");
        Ok(a)
    }

    pub fn from_spec(spec: &HeckeSpec) -> Result<Self> {
        match spec {
            HeckeSpec::TypeA { n } => Self::type_a(*n),
            HeckeSpec::TypeC { k, c } => Self::type_c(*k, c.clone()),
        }
    }

    pub fn from_group(g: &GroupDescriptor) -> Result<Self> {
        Self::from_spec(&table_one(g).hecke)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn k(&self) -> usize {
        self.datum.k()
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn params(&self) -> &ParameterFunction {
        &self.params
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn simple(&self) -> &[RootParam] {
        &self.simple
    }

    pub fn positive(&self) -> &[RootParam] {
        &self.positive
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn reduced_word(&self, w: &WeylElement) -> &[usize] {
        &self.words[w]
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::scalar(Rational::one(), self.k())
    }

    pub fn scalar(&self, c: Rational) -> HeckeElement {
        HeckeElement::scalar(c, self.k())
    }

    pub fn eps_coeffs(&self, i: usize) -> Vec<Rational> {
        (0..self.k()).map(|j| if i == j { int(1) } else { int(0) }).collect()
    }

    /// `ε_i` (zero based).
    pub fn eps(&self, i: usize) -> HeckeElement {
        HeckeElement::poly(NuPoly::var(i), self.k())
    }

    pub fn poly(&self, p: NuPoly) -> HeckeElement {
        HeckeElement::poly(p, self.k())
    }

    /// Simple reflection `s_i` as an algebra element.
    pub fn s(&self, i: usize) -> HeckeElement {
        HeckeElement::group(self.simple[i].reflection.clone())
    }

    pub fn group(&self, w: &WeylElement) -> HeckeElement {
        HeckeElement::group(w.clone())
    }

    /// `w·f`
    pub fn reflection_action(&self, w: &WeylElement, f: &NuPoly) -> NuPoly {
        w.act_poly(f)
    }

    /// `s_i·x`
    pub fn left_mul_simple(&self, i: usize, x: &HeckeElement) -> HeckeElement {
        let sp = &self.simple[i];
        let img = sp.reflection.images();
        let alpha: Vec<Rational> = sp.root.iter().map(|&a| int(a)).collect();
        let mut out = HeckeElement::zero();
        for (w, p) in x.terms() {
            out.add_term(sp.reflection.compose(w), p.signed_permute(img));
            if !sp.c.is_zero() {
                out.add_term(w.clone(), p.demazure(img, &alpha).scale(&sp.c));
            }
        }
        out
    }

    /// `w·x`
    pub fn left_mul_group(&self, w: &WeylElement, x: &HeckeElement) -> HeckeElement {
        let mut out = x.clone();
        for &i in self.words[w].iter().rev() {
            out = self.left_mul_simple(i, &out);
        }
        out
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, p) in a.terms() {
            out = out + self.left_mul_group(w, b).poly_mul_left(p);
        }
        out
    }

    pub fn product(&self, xs: &[HeckeElement]) -> HeckeElement {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn commutator(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        self.mul(a, b) - self.mul(b, a)
    }

    fn linear_coeffs(&self, f: &NuPoly) -> Vec<Rational> {
        assert!(f.degree() <= 1 && f.constant_term().is_zero(), "expected a linear form, got {f:?}");
        (0..self.k()).map(|i| f.coeff(&unit_mono(i))).collect()
    }

    /// `½ Σ_{β>0} c(β) f(β) s_β`
    pub fn drinfeld_correction(&self, f: &NuPoly) -> HeckeElement {
        let a = self.linear_coeffs(f);
        let mut out = HeckeElement::zero();
        for rp in &self.positive {
            let fb: Rational = a.iter().zip(&rp.root).map(|(x, &r)| x * int(r)).sum();
            let coef = &rp.c * fb * rat(1, 2);
            out.add_term(rp.reflection.clone(), NuPoly::constant(coef));
        }
        out
    }

    /// `f̃ = f − ½ Σ_{β>0} c(β) f(β) s_β` for a linear form `f`.
    pub fn drinfeld_lift(&self, f: &NuPoly) -> HeckeElement {
        self.poly(f.clone()) - self.drinfeld_correction(f)
    }

    /// `f* = −f + Σ_{β>0} c(β) f(β) s_β` for linear `f` given by coefficients.
    fn star_linear(&self, a: &[Rational]) -> HeckeElement {
        let f = NuPoly::linear(a);
        -self.poly(f.clone()) + self.drinfeld_correction(&f).scale(&int(2))
    }

    fn star_monomial(&self, m: &[u32]) -> HeckeElement {
        let mut out = self.one();
        for (i, &e) in m.iter().enumerate() {
            for _ in 0..e {
                out = self.mul(&out, &self.star_eps[i]);
            }
        }
        out
    }

    /// The conjugate-linear anti-involution with `w* = w⁻¹` and
    /// `f* = −f + Σ c(β) f(β) s_β`; on rational data it is linear.
    pub fn star(&self, x: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, p) in x.terms() {
            let mut ps = HeckeElement::zero();
            for (m, c) in p.terms() {
                ps = ps + self.star_monomial(m).scale(c);
            }
            out = out + self.left_mul_group(&w.inverse(), &ps);
        }
        out
    }

    /// Membership in the subalgebra spanned by `S(V*)·w` with `w` an even
    /// signed permutation; for `H̃_k(0)` this is the copy of `H(D_k, 1)`.
    pub fn in_d_subalgebra(&self, x: &HeckeElement) -> bool {
        x.support().all(|w| w.num_flips() % 2 == 0)
    }
}

impl fmt::Display for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub(crate) fn unit_mono(i: usize) -> Vec<u32> {
    let mut m = vec![0; i + 1];
    m[i] = 1;
    m
}

#[cfg(test)]
mod tests;
