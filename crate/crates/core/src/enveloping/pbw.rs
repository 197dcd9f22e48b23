use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_kernel::{ExactMatrix, GaussRational, Ring};
use crate::lie_models::{flatten, CMatrix, LieModel};
use crate::root_data::is_positive;

/// Which block of the ordered basis a letter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    N,
    A,
    K,
}

pub type Word = Vec<usize>;

/// A finite sum of words in the ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UEAElement {
    pub terms: BTreeMap<Word, GaussRational>,
    pub normal_ordered: bool,
}

impl UEAElement {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), normal_ordered: true }
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        let normal = w.windows(2).all(|p| p[0] <= p[1]);
        let mut terms = BTreeMap::new();
        terms.insert(w, GaussRational::from_int(1));
        Self { terms, normal_ordered: normal }
    }

    pub fn letter(i: usize) -> Self {
        Self::word(vec![i])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        if w.windows(2).any(|p| p[0] > p[1]) {
            self.normal_ordered = false;
        }
        let e = self.terms.entry(w).or_default();
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out.normal_ordered = self.normal_ordered && o.normal_ordered;
        out
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        let mut out = Self::zero();
        out.normal_ordered = self.normal_ordered;
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Concatenation product, not reduced.
    pub fn concat(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x.clone() * y.clone());
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

type Sparse = Vec<(usize, GaussRational)>;

/// A Lie algebra with an ordered basis, its structure constants and the
/// block of each basis letter. Words are normal ordered when nondecreasing.
pub struct OrderedLie {
    letters: Vec<Letter>,
    brackets: Vec<Vec<Sparse>>,
    full_cache: Mutex<HashMap<(usize, Word), BTreeMap<Word, GaussRational>>>,
    coset_cache: Mutex<HashMap<(usize, Word), BTreeMap<Word, GaussRational>>>,
}

impl Clone for OrderedLie {
    fn clone(&self) -> Self {
        Self::from_constants(self.letters.clone(), self.brackets.clone())
    }
}

impl std::fmt::Debug for OrderedLie {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OrderedLie").field("letters", &self.letters).finish()
    }
}

impl OrderedLie {
    /// `brackets[i][j]` are the coordinates of `[b_i, b_j]`.
    pub fn from_constants(letters: Vec<Letter>, brackets: Vec<Vec<Sparse>>) -> Self {
        Self { letters, brackets, full_cache: Mutex::default(), coset_cache: Mutex::default() }
    }

    pub fn dim(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_kind(&self, i: usize) -> Letter {
        self.letters[i]
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, GaussRational)] {
        &self.brackets[i][j]
    }

    /// Antisymmetry and the Jacobi identity on basis triples.
    pub fn jacobi_defects(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let br = |v: &[GaussRational], j: usize| {
            let mut out = vec![GaussRational::default(); n];
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (l, d) in &self.brackets[i][j] {
                    out[*l] = out[*l].clone() + c.clone() * d.clone();
                }
            }
            out
        };
        let unit = |i: usize| {
            let mut v = vec![GaussRational::default(); n];
            v[i] = GaussRational::from_int(1);
            v
        };
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ij = br(&unit(i), j);
                let ji = br(&unit(j), i);
                if ij.iter().zip(&ji).any(|(a, b)| !(a.clone() + b.clone()).is_zero()) {
                    bad.push((i, j, j));
                }
                for k in j + 1..n {
                    let a = br(&ij, k);
                    let b = br(&br(&unit(j), k), i);
                    let c = br(&br(&unit(k), i), j);
                    if (0..n).any(|l| !(a[l].clone() + b[l].clone() + c[l].clone()).is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    fn left_mul(&self, x: usize, w: &[usize], coset: bool) -> BTreeMap<Word, GaussRational> {
        let cache = if coset { &self.coset_cache } else { &self.full_cache };
        let key = (x, w.to_vec());
        if let Some(hit) = cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let mut out = BTreeMap::new();
        if w.is_empty() || x <= w[0] {
            if !(coset && w.is_empty() && self.letters[x] == Letter::K) {
                let mut word = vec![x];
                word.extend_from_slice(w);
                out.insert(word, GaussRational::from_int(1));
            }
        } else {
            let rest = &w[1..];
            for (u, c) in self.left_mul(x, rest, coset) {
                for (v, d) in self.left_mul(w[0], &u, coset) {
                    accumulate(&mut out, v, c.clone() * d);
                }
            }
            for (l, c) in &self.brackets[x][w[0]] {
                for (v, d) in self.left_mul(*l, rest, coset) {
                    accumulate(&mut out, v, c.clone() * d);
                }
            }
        }
        cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    fn reduce_with(&self, u: &UEAElement, coset: bool) -> UEAElement {
        let mut out = UEAElement::zero();
        for (w, c) in &u.terms {
            let mut acc: BTreeMap<Word, GaussRational> = BTreeMap::new();
            acc.insert(Vec::new(), c.clone());
            for &x in w.iter().rev() {
                let mut next = BTreeMap::new();
                for (v, d) in acc {
                    for (y, e) in self.left_mul(x, &v, coset) {
                        accumulate(&mut next, y, d.clone() * e);
                    }
                }
                acc = next;
            }
            for (v, d) in acc {
                out.add_term(v, d);
            }
        }
        out.normal_ordered = true;
        out
    }

    /// PBW normal form in `U(g)`.
    pub fn pbw_reduce(&self, u: &UEAElement) -> UEAElement {
        self.reduce_with(u, false)
    }

    /// Normal form modulo the left ideal `U(g)k`: words of `n`- then
    /// `a`-letters.
    pub fn coset_reduce(&self, u: &UEAElement) -> UEAElement {
        self.reduce_with(u, true)
    }

    /// Normal form computed by repeatedly swapping the rightmost
    /// inversion. Used to cross-check [`Self::pbw_reduce`].
    pub fn pbw_reduce_rightmost(&self, u: &UEAElement) -> UEAElement {
        let mut todo: Vec<(Word, GaussRational)> = u.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = UEAElement::zero();
        while let Some((w, c)) = todo.pop() {
            match (1..w.len()).rev().find(|&i| w[i - 1] > w[i]) {
                None => out.add_term(w, c),
                Some(i) => {
                    let mut swapped = w.clone();
                    swapped.swap(i - 1, i);
                    todo.push((swapped, c.clone()));
                    for (l, d) in &self.brackets[w[i - 1]][w[i]] {
                        let mut b = w[..i - 1].to_vec();
                        b.push(*l);
                        b.extend_from_slice(&w[i + 1..]);
                        todo.push((b, c.clone() * d.clone()));
                    }
                }
            }
        }
        out.normal_ordered = true;
        out
    }

    pub fn mul(&self, a: &UEAElement, b: &UEAElement) -> UEAElement {
        self.pbw_reduce(&a.concat(b))
    }
}

fn accumulate(map: &mut BTreeMap<Word, GaussRational>, w: Word, c: GaussRational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(w.clone()).or_default();
    *e = e.clone() + c;
    if e.is_zero() {
        map.remove(&w);
    }
}

/// The ordered basis `n < a < k` of `g` for a classical model, with
/// `n` spanned by the positive restricted root spaces.
#[derive(Clone, Debug)]
pub struct IwasawaBasis {
    model: LieModel,
    elements: Vec<CMatrix>,
    coords: ExactMatrix<GaussRational>,
    n_roots: Vec<Vec<i64>>,
    lie: OrderedLie,
}

impl IwasawaBasis {
    pub fn new(model: &LieModel) -> Result<Self> {
        let mut elements = Vec::new();
        let mut letters = Vec::new();
        let mut n_roots = Vec::new();
        let mut roots: Vec<Vec<i64>> = crate::lie_models::roots::restricted_roots(model)
            .into_iter()
            .map(|(a, _)| a)
            .filter(|a| is_positive(a))
            .collect();
        roots.sort();
        for alpha in roots {
            for x in crate::lie_models::roots::root_space(model, &alpha) {
                elements.push(x);
                letters.push(Letter::N);
                n_roots.push(alpha.clone());
            }
        }
        for h in model.a() {
            elements.push(h.clone());
            letters.push(Letter::A);
        }
        for z in model.k_basis() {
            elements.push(z);
            letters.push(Letter::K);
        }
        let dim = model.basis().len();
        if elements.len() != dim {
            return Err(Error::Other(format!(
                "Iwasawa basis has {} elements, expected {dim}",
                elements.len()
            )));
        }
        let flat: Vec<Vec<GaussRational>> = elements.iter().map(flatten).collect();
        let cols = ExactMatrix::from_columns(flat[0].len(), &flat);
        let square_rows = {
            let (_, piv) = cols.transpose().rref();
            if piv.len() != dim {
                return Err(Error::Other("Iwasawa basis is linearly dependent".into()));
            }
            piv
        };
        let square = ExactMatrix::from_fn(dim, dim, |r, c| flat[c][square_rows[r]].clone());
        let inv = square.inverse()?;
        let coords = ExactMatrix::from_fn(dim, flat[0].len(), |r, c| {
            square_rows.iter().position(|&p| p == c).map(|i| inv.get(r, i).clone()).unwrap_or_default()
        });
        let mut out = Self {
            model: model.clone(),
            elements,
            coords,
            n_roots,
            lie: OrderedLie::from_constants(letters, Vec::new()),
        };
        let brackets = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| out.coordinates(&out.elements[i].commutator(&out.elements[j])).expect("g is closed"))
                    .collect()
            })
            .collect();
        out.lie = OrderedLie::from_constants(out.lie.letters.clone(), brackets);
        Ok(out)
    }

    pub fn model(&self) -> &LieModel {
        &self.model
    }

    pub fn lie(&self) -> &OrderedLie {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &CMatrix {
        &self.elements[i]
    }

    /// Indices of the `a`-letters, in the order of `model.a()`.
    pub fn a_letters(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.lie.letter_kind(i) == Letter::A).collect()
    }

    /// `ρ(H_j) = ½ Σ_{α>0} dim g_α · α(H_j)`.
    pub fn rho(&self) -> Vec<crate::exact_kernel::Rational> {
        let k = self.model.rank();
        (0..k)
            .map(|j| {
                let s: i64 = self.n_roots.iter().map(|a| a[j]).sum();
                crate::exact_kernel::Rational::new(s.into(), 2.into())
            })
            .collect()
    }

    /// Restricted root of an `n`-letter.
    pub fn n_root(&self, i: usize) -> Option<&[i64]> {
        self.n_roots.get(i).map(Vec::as_slice)
    }

    /// Sparse coordinates of a matrix in the ordered basis.
    pub fn coordinates(&self, x: &CMatrix) -> Result<Sparse> {
        let v = flatten(x);
        let c = self.coords.apply(&v);
        let mut back = CMatrix::zeros(x.rows(), x.cols());
        for (ci, e) in c.iter().zip(&self.elements) {
            if !ci.is_zero() {
                back = back.add(&e.scale(ci));
            }
        }
        if back != *x {
            return Err(Error::Other("matrix is not in g".into()));
        }
        Ok(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
    }

    /// A matrix of `g` as a degree-one element.
    pub fn embed(&self, x: &CMatrix) -> Result<UEAElement> {
        let mut out = UEAElement::zero();
        for (i, c) in self.coordinates(x)? {
            out.add_term(vec![i], c);
        }
        Ok(out)
    }
}
