use num_traits::Zero;

use crate::exact_kernel::{GaussRational, Ring};
use crate::lie_models::CMatrix;

pub type Vector = Vec<GaussRational>;

/// `V^{⊗slots}` with `dim V = n`; slots are numbered from 1 and slot 1 is
/// the most significant digit of a coordinate index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub n: usize,
    pub slots: usize,
}

impl Shape {
    pub fn new(n: usize, slots: usize) -> Self {
        Self { n, slots }
    }

    pub fn size(&self) -> usize {
        self.n.pow(self.slots as u32)
    }

    fn stride(&self, slot: usize) -> usize {
        assert!(slot >= 1 && slot <= self.slots, "slot {slot} out of range");
        self.n.pow((self.slots - slot) as u32)
    }

    pub fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.slots];
        for s in (0..self.slots).rev() {
            d[s] = idx % self.n;
            idx /= self.n;
        }
        d
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.n + d)
    }

    pub fn zero(&self) -> Vector {
        vec![GaussRational::default(); self.size()]
    }

    pub fn basis_vector(&self, digits: &[usize]) -> Vector {
        let mut v = self.zero();
        v[self.index(digits)] = GaussRational::from_int(1);
        v
    }

    /// `v₁⊗⋯⊗v_m` for vectors in `V`.
    pub fn simple_tensor(&self, factors: &[Vector]) -> Vector {
        assert_eq!(factors.len(), self.slots);
        let mut out = vec![GaussRational::from_int(1)];
        for f in factors {
            let mut next = Vec::with_capacity(out.len() * self.n);
            for a in &out {
                for b in f {
                    next.push(a.clone() * b.clone());
                }
            }
            out = next;
        }
        out
    }

    /// `A` acting in one slot.
    pub fn apply_slot(&self, slot: usize, a: &CMatrix, v: &[GaussRational]) -> Vector {
        let st = self.stride(slot);
        let n = self.n;
        let mut out = self.zero();
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let d = (idx / st) % n;
            let base = idx - d * st;
            for r in 0..n {
                let c = a.get(r, d);
                if !c.is_zero() {
                    out[base + r * st] = out[base + r * st].clone() + c.clone() * x.clone();
                }
            }
        }
        out
    }

    /// `g⊗⋯⊗g`.
    pub fn apply_group(&self, g: &CMatrix, v: &[GaussRational]) -> Vector {
        (1..=self.slots).fold(v.to_vec(), |acc, s| self.apply_slot(s, g, &acc))
    }

    /// `Σ_s (X)_s`.
    pub fn apply_derivation(&self, x: &CMatrix, v: &[GaussRational]) -> Vector {
        let mut out = self.zero();
        for s in 1..=self.slots {
            add_into(&mut out, &self.apply_slot(s, x, v));
        }
        out
    }

    /// The flip `R_{i,j}` exchanging two slots.
    pub fn flip(&self, i: usize, j: usize, v: &[GaussRational]) -> Vector {
        let mut out = self.zero();
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut d = self.digits(idx);
            d.swap(i - 1, j - 1);
            out[self.index(&d)] = x.clone();
        }
        out
    }

    /// `pr_i`: contraction of slots `i, i+1` with the bilinear form `J`,
    /// landing in `V^{⊗(slots−2)}`.
    pub fn contract(&self, i: usize, j: &CMatrix, v: &[GaussRational]) -> Vector {
        let small = Shape::new(self.n, self.slots - 2);
        let mut out = small.zero();
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut d = self.digits(idx);
            let c = j.get(d[i - 1], d[i]).clone();
            if c.is_zero() {
                continue;
            }
            d.drain(i - 1..=i);
            let t = small.index(&d);
            out[t] = out[t].clone() + c * x.clone();
        }
        out
    }

    /// Dense matrix of a linear operator given by its action on vectors.
    pub fn matrix_of(&self, op: impl Fn(&[GaussRational]) -> Vector) -> CMatrix {
        let size = self.size();
        let mut m = CMatrix::zeros(size, size);
        for c in 0..size {
            let col = op(&self.basis_vector(&self.digits(c)));
            for (r, x) in col.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x);
                }
            }
        }
        m
    }
}

pub fn add_into(acc: &mut [GaussRational], v: &[GaussRational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = a.clone() + b.clone();
        }
    }
}

pub fn scale(v: &[GaussRational], c: &GaussRational) -> Vector {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

pub fn sub(a: &[GaussRational], b: &[GaussRational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn is_zero(v: &[GaussRational]) -> bool {
    v.iter().all(Zero::is_zero)
}
