use serde::Serialize;
use std::fmt;

use crate::exact_kernel::{NuPoly, Rational};

/// A signed permutation: `w(e_i) = sign·e_j` where `images[i] = ±(j+1)`.
///
/// Every Weyl group of type A, B, C, BC or D in the standard coordinates is a
/// group of such elements, and the same data acts on `V*` through the
/// identification given by the standard inner product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct WeylElement {
    images: Vec<i32>,
}

impl WeylElement {
    pub fn identity(k: usize) -> Self {
        Self { images: (1..=k as i32).collect() }
    }

    pub fn from_images(images: Vec<i32>) -> Self {
        let k = images.len() as u32;
        let mut seen = vec![false; k as usize];
        for &x in &images {
            assert!(x != 0 && x.unsigned_abs() <= k, "bad signed permutation {images:?}");
            let j = (x.unsigned_abs() - 1) as usize;
            assert!(!seen[j], "bad signed permutation {images:?}");
            seen[j] = true;
        }
        Self { images }
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let images = other
            .images
            .iter()
            .map(|&x| {
                let y = self.images[(x.unsigned_abs() - 1) as usize];
                if x < 0 {
                    -y
                } else {
                    y
                }
            })
            .collect();
        Self { images }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let j = (x.unsigned_abs() - 1) as usize;
            inv[j] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self { images: inv }
    }

    /// Number of sign flips.
    pub fn num_flips(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Underlying permutation, zero based: `e_i ↦ ±e_{perm[i]}`.
    pub fn permutation(&self) -> Vec<usize> {
        self.images.iter().map(|&x| (x.unsigned_abs() - 1) as usize).collect()
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let j = (x.unsigned_abs() - 1) as usize;
            out[j] = if x < 0 { -v[i] } else { v[i] };
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::default(); v.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let j = (x.unsigned_abs() - 1) as usize;
            out[j] = if x < 0 { -v[i].clone() } else { v[i].clone() };
        }
        out
    }

    /// Action on `S(V*)` by substitution.
    pub fn act_poly(&self, p: &NuPoly) -> NuPoly {
        p.signed_permute(&self.images)
    }

    /// The reflection in `alpha` when it is a signed permutation.
    pub fn reflection(alpha: &[i64]) -> Self {
        let k = alpha.len();
        let norm: i64 = alpha.iter().map(|a| a * a).sum();
        assert!(norm > 0, "zero root");
        let mut images = vec![0; k];
        for i in 0..k {
            // s(e_i) = e_i - 2 α_i/(α,α)·α
            let mut v: Vec<i64> = alpha.iter().map(|a| -2 * alpha[i] * a).collect();
            v[i] += norm;
            let nz: Vec<usize> = (0..k).filter(|&j| v[j] != 0).collect();
            assert!(nz.len() == 1 && v[nz[0]].abs() == norm, "reflection is not a signed permutation");
            let j = nz[0] as i32 + 1;
            images[i] = if v[nz[0]] < 0 { -j } else { j };
        }
        Self { images }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
