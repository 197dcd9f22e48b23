use num_traits::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Ring};

/// Exponent vector with trailing zeros trimmed, so `x0^2` is `[2]`.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(v)
}

/// Sparse polynomial in variables `x0, x1, ...` with rational coefficients.
///
/// The same type serves for elements of `S(a)` (variables `ε_i`) and for
/// entries of principal-series matrices written symbolically in `ν`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NuPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl NuPoly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = Self::default();
        p.add_term(m, Rational::one());
        p
    }

    /// `Σ coeffs[i]·x_i`
    pub fn linear(coeffs: &[Rational]) -> Self {
        let mut p = Self::default();
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; i + 1];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(trim(m)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u32]) -> Rational {
        self.terms.get(&trim(m.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Number of variables actually occurring (one past the largest index).
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Evaluates at a point given in any ring containing the rationals.
    pub fn eval_in<T: Ring>(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_rational(c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.eval_in(point)
    }

    /// Replaces `x_i` by `subs[i]`.
    pub fn substitute(&self, subs: &[NuPoly]) -> NuPoly {
        let mut acc = NuPoly::zero();
        for (m, c) in &self.terms {
            let mut t = NuPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * subs[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Action of a signed permutation: `x_i ↦ sign·x_j` where
    /// `images[i] = ±(j+1)`.
    pub fn signed_permute(&self, images: &[i32]) -> NuPoly {
        let mut out = NuPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = vec![0u32; images.len()];
            let mut sign = 1i32;
            for (i, &e) in m.iter().enumerate() {
                let img = images[i];
                let j = (img.unsigned_abs() - 1) as usize;
                nm[j] += e;
                if img < 0 && e % 2 == 1 {
                    sign = -sign;
                }
            }
            let c = if sign < 0 { -c.clone() } else { c.clone() };
            out.add_term(nm, c);
        }
        out
    }

    /// Divided difference `(p - s·p)/α^∨` for the reflection `s` (given as
    /// a signed permutation) in the root `alpha`, normalized so that a linear
    /// form `f` goes to `f(alpha)`.
    pub fn demazure(&self, s_images: &[i32], alpha: &[Rational]) -> NuPoly {
        let mut out = NuPoly::zero();
        for (m, c) in &self.terms {
            // Δ(m·x_i) = Δ(m)·x_i + (s·m)·α_i, unrolled over the factors.
            let mut cur = NuPoly::one();
            let mut delta = NuPoly::zero();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    let a_i = alpha.get(i).cloned().unwrap_or_else(Rational::zero);
                    delta = delta * NuPoly::var(i)
                        + cur.signed_permute(s_images).scale(&a_i);
                    cur = cur * NuPoly::var(i);
                }
            }
            out = out + delta.scale(c);
        }
        out
    }

    /// Terms ordered by total degree, then `x0` before `x1` before ...
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    /// Text form with the given variable names, e.g. `1/2*e1^2*e2 - 3`.
    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.is_empty() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl Add for NuPoly {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for NuPoly {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for NuPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for NuPoly {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = NuPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl Zero for NuPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for NuPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Ring for NuPoly {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::{int, rat};
    use proptest::prelude::*;

    fn e(i: usize) -> NuPoly {
        NuPoly::var(i)
    }

    #[test]
    fn trimmed_keys_and_cancellation() {
        let p = e(0) * e(1) - e(1) * e(0);
        assert!(p.is_zero());
        let q = NuPoly::monomial(vec![1, 0, 0], int(2));
        assert_eq!(q.coeff(&[1]), int(2));
        assert_eq!(q.num_vars(), 1);
    }

    #[test]
    fn format_orders_by_degree() {
        let p = e(0) * e(0) * e(1).scale(&rat(1, 2)) - NuPoly::constant(int(3)) + e(1);
        let s = p.format_with(&|i| format!("e{}", i + 1));
        assert_eq!(s, "-3 + e2 + 1/2*e1^2*e2");
    }

    #[test]
    fn signed_permutation_action() {
        let p = e(0) * e(0) * e(1);
        // x0 -> -x1, x1 -> x0
        let q = p.signed_permute(&[-2, 1]);
        assert_eq!(q, e(1) * e(1) * e(0));
        let r = e(0).signed_permute(&[-2, 1]);
        assert_eq!(r, -e(1));
    }

    #[test]
    fn demazure_on_linear_forms() {
        // s = s_{e1-e2}, α = (1,-1)
        let alpha = [int(1), int(-1)];
        assert_eq!(e(0).demazure(&[2, 1], &alpha), NuPoly::one());
        assert_eq!(e(1).demazure(&[2, 1], &alpha), -NuPoly::one());
        // s = sbar (x0 -> -x0), α = 2e1
        assert_eq!(e(0).demazure(&[-1], &[int(2)]), NuPoly::constant(int(2)));
    }

    fn small_poly() -> impl Strategy<Value = NuPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..5), 0..5).prop_map(|ts| {
            let mut p = NuPoly::zero();
            for ((a, b, c), k) in ts {
                p.add_term(vec![a, b, c], int(k));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), x in -3i64..4, y in -3i64..4) {
            let pt = [int(x), rat(y, 2), int(1)];
            prop_assert_eq!((a.clone() * b.clone()).eval(&pt), a.eval(&pt) * b.eval(&pt));
        }

        #[test]
        fn demazure_times_coroot_is_difference(a in small_poly()) {
            // s_{e2-e3} on three variables; coroot form x1 - x2
            let s = [1, 3, 2];
            let alpha = [int(0), int(1), int(-1)];
            let d = a.demazure(&s, &alpha);
            let coroot = NuPoly::linear(&alpha);
            prop_assert_eq!(d * coroot, a.clone() - a.signed_permute(&s));
        }

        #[test]
        fn demazure_long_root(a in small_poly()) {
            // s = flip x2, root 2e3, coroot form x2
            let s = [1, 2, -3];
            let alpha = [int(0), int(0), int(2)];
            let d = a.demazure(&s, &alpha);
            let coroot = NuPoly::var(2);
            prop_assert_eq!(d * coroot, a.clone() - a.signed_permute(&s));
        }
    }
}
