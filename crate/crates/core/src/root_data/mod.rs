//! Classical root data in standard coordinates and their Weyl groups.
//!
//! Roots are integer vectors in `V = ℚ^k`. Type `A` lives on `k` coordinates
//! (so `A_{k-1}`); the other families have rank `k`. For `BC` the full system
//! `Φ` is kept alongside the reduced part `Φ∘` of indivisible roots, which is
//! of type `B`.

mod table;
mod weyl;

pub use table::{table_one, GroupDescriptor, GroupFamily, HeckeSpec, TableOneRow};
pub use weyl::WeylElement;

use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_RANK_BOUND: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Family {
    A,
    B,
    C,
    BC,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::BC => "BC",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    family: Family,
    k: usize,
    roots: Vec<Vec<i64>>,
    reduced: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
}

fn unit(k: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; k];
    v[i] = c;
    v
}

fn pair(k: usize, i: usize, j: usize, si: i64, sj: i64) -> Vec<i64> {
    let mut v = vec![0; k];
    v[i] = si;
    v[j] = sj;
    v
}

pub fn is_positive(root: &[i64]) -> bool {
    root.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

pub fn inner(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootDatum {
    pub fn new(family: Family, k: usize) -> Result<Self> {
        Self::with_bound(family, k, DEFAULT_RANK_BOUND)
    }

    pub fn with_bound(family: Family, k: usize, bound: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDatum("rank must be positive".into()));
        }
        if family == Family::D && k < 2 {
            return Err(Error::InvalidDatum("D_1 is not a root system".into()));
        }
        if k > bound {
            return Err(Error::RankTooLarge { rank: k, bound });
        }
        let mut roots = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                roots.push(pair(k, i, j, 1, -1));
                roots.push(pair(k, i, j, -1, 1));
                if family != Family::A {
                    roots.push(pair(k, i, j, 1, 1));
                    roots.push(pair(k, i, j, -1, -1));
                }
            }
            if matches!(family, Family::B | Family::BC) {
                roots.push(unit(k, i, 1));
                roots.push(unit(k, i, -1));
            }
            if matches!(family, Family::C | Family::BC) {
                roots.push(unit(k, i, 2));
                roots.push(unit(k, i, -2));
            }
        }
        let set: HashSet<Vec<i64>> = roots.iter().cloned().collect();
        let reduced: Vec<Vec<i64>> = roots
            .iter()
            .filter(|r| {
                !(r.iter().all(|x| x % 2 == 0) && set.contains(&r.iter().map(|x| x / 2).collect::<Vec<_>>()))
            })
            .cloned()
            .collect();
        let positive: Vec<Vec<i64>> = reduced.iter().filter(|r| is_positive(r)).cloned().collect();
        let mut simple: Vec<Vec<i64>> = (0..k.saturating_sub(1)).map(|i| pair(k, i, i + 1, 1, -1)).collect();
        match family {
            Family::A => {}
            Family::B | Family::BC => simple.push(unit(k, k - 1, 1)),
            Family::C => simple.push(unit(k, k - 1, 2)),
            Family::D => simple.push(pair(k, k - 2, k - 1, 1, 1)),
        }
        Ok(Self { family, k, roots, reduced, positive, simple })
    }

    /// Parses `A2`, `B3`, `C2`, `BC1`, `D4`; `A_n` uses `n+1` coordinates.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("bad descriptor {s:?}")))?;
        let (f, n) = t.split_at(split);
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad descriptor {s:?}")))?;
        let family = match f.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "BC" => Family::BC,
            "D" => Family::D,
            _ => return Err(Error::Parse(format!("bad family in {s:?}"))),
        };
        let k = if family == Family::A { n + 1 } else { n };
        Self::new(family, k)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Family of `Φ∘`.
    pub fn reduced_family(&self) -> Family {
        if self.family == Family::BC {
            Family::B
        } else {
            self.family
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn reduced_roots(&self) -> &[Vec<i64>] {
        &self.reduced
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        self.simple.iter().map(|a| WeylElement::reflection(a)).collect()
    }

    pub fn weyl_order(&self) -> usize {
        let f: usize = (1..=self.k).product();
        match self.reduced_family() {
            Family::A => f,
            Family::D => f << (self.k - 1),
            _ => f << self.k,
        }
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        w.rank() == self.k
            && match self.reduced_family() {
                Family::A => w.num_flips() == 0,
                Family::D => w.num_flips().is_multiple_of(2),
                _ => true,
            }
    }

    /// All elements, ordered by length and then lexicographically.
    pub fn weyl_enumerate(&self) -> Vec<WeylElement> {
        let gens = self.simple_reflections();
        let id = WeylElement::identity(self.k);
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut layers = vec![vec![id]];
        loop {
            let mut next = Vec::new();
            for w in layers.last().unwrap() {
                for s in &gens {
                    let v = s.compose(w);
                    if seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            layers.push(next);
        }
        layers.into_iter().flatten().collect()
    }

    /// Number of positive roots of `Φ∘` sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive.iter().filter(|r| !is_positive(&w.apply_int(r))).count()
    }

    /// Reduced word as indices into [`Self::simple_roots`], leftmost first.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let gens = self.simple_reflections();
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let inv = cur.inverse();
            let i = (0..gens.len())
                .find(|&i| !is_positive(&inv.apply_int(&self.simple[i])))
                .expect("non-identity element has a left descent");
            word.push(i);
            cur = gens[i].compose(&cur);
        }
        word
    }

    /// Reflection in a root, as a group element.
    pub fn reflection(&self, root: &[i64]) -> WeylElement {
        WeylElement::reflection(root)
    }

    /// Positive root of `Φ∘` proportional to `v`, if any.
    pub fn positive_representative(&self, v: &[i64]) -> Option<Vec<i64>> {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.positive.iter().find(|r| r.as_slice() == v || **r == neg).cloned()
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = if self.family == Family::A { self.k - 1 } else { self.k };
        write!(f, "{}{}", self.family, n)
    }
}
