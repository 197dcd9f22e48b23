use num_traits::Zero;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::exact_kernel::{NuPoly, Rational};
use crate::root_data::WeylElement;

/// An element `Σ_w p_w·w` in PBW form, polynomial on the left.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeElement {
    terms: BTreeMap<WeylElement, NuPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(p: NuPoly, w: WeylElement) -> Self {
        let mut x = Self::zero();
        x.add_term(w, p);
        x
    }

    pub fn group(w: WeylElement) -> Self {
        Self::term(NuPoly::constant(Rational::from_integer(1.into())), w)
    }

    pub fn poly(p: NuPoly, k: usize) -> Self {
        Self::term(p, WeylElement::identity(k))
    }

    pub fn scalar(c: Rational, k: usize) -> Self {
        Self::poly(NuPoly::constant(c), k)
    }

    pub fn add_term(&mut self, w: WeylElement, p: NuPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(q) => {
                let s = q + p;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, p);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &NuPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &WeylElement) -> NuPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &WeylElement> {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.scale(c));
        }
        out
    }

    /// `p·self`
    pub fn poly_mul_left(&self, p: &NuPoly) -> Self {
        let mut out = Self::zero();
        for (w, q) in &self.terms {
            out.add_term(w.clone(), p.clone() * q.clone());
        }
        out
    }

    /// `self·w`
    pub fn group_mul_right(&self, w: &WeylElement) -> Self {
        let mut out = Self::zero();
        for (v, q) in &self.terms {
            out.add_term(v.compose(w), q.clone());
        }
        out
    }

    /// Largest polynomial degree occurring.
    pub fn degree(&self) -> u32 {
        self.terms.values().map(NuPoly::degree).max().unwrap_or(0)
    }
}

impl Add for HeckeElement {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (w, p) in o.terms {
            self.add_term(w, p);
        }
        self
    }
}

impl Neg for HeckeElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(w, p)| (w, -p)).collect() }
    }
}

impl Sub for HeckeElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
