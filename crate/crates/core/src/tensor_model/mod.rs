//! The space `μ₀*⊗V^{⊗k}` of a classical real group, its `M`-invariants and
//! the operators `π_k(·)` acting on it.
//!
//! Slots `1..=k` carry copies of `V`. The one-dimensional factor `μ₀*` is
//! never stored: it only contributes the scalar twist `μ₀(g)⁻¹` to the
//! action of `K`. Position `0` of `X⊗V^{⊗k}` lives in the enveloping module,
//! not in this model.

mod checks;
mod invariants;
mod ops;
#[cfg(test)]
mod tests;

pub use checks::{
    ak_relations_check, contraction_kernel_check, diagonal_commutation_check, form_positivity_check,
    kact_identity_check, partial_sum_check, q_mu_parameters, rank_sensitivity_check, regular_rep_check,
    sbar_anticommutator_check, single_petal_check, verify_all, weyl_match_check,
};
pub use invariants::{closed_form_basis, invariants, solve_invariants, InvariantBasis};
pub use ops::{Shape, Vector};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_kernel::{Field, GaussRational, Ring};
use crate::lie_models::{CMatrix, Character, LieModel};
use crate::root_data::{Family, GroupFamily, RootDatum, WeylElement};

/// Which part of `Ω` to sum over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Full,
    K,
    P,
}

#[derive(Clone, Debug)]
pub struct TensorSpace {
    model: LieModel,
    k: usize,
    mu: Character,
    shape: Shape,
    datum: RootDatum,
}

impl TensorSpace {
    /// `μ₀*⊗V^{⊗k}` with `k` the real rank and `μ = μ₀`.
    pub fn new(model: LieModel) -> Self {
        let k = model.rank();
        Self::with_slots(model, k)
    }

    /// Same with an arbitrary number of slots.
    pub fn with_slots(model: LieModel, k: usize) -> Self {
        let rank = model.rank();
        let family = if model.group().family == GroupFamily::GL { Family::A } else { Family::C };
        let datum = RootDatum::with_bound(family, rank, usize::MAX).expect("real rank is positive");
        let shape = Shape::new(model.dim_v(), k);
        let mu = model.mu0();
        Self { model, k, mu, shape, datum }
    }

    pub fn with_character(mut self, mu: Character) -> Self {
        self.mu = mu;
        self
    }

    pub fn model(&self) -> &LieModel {
        &self.model
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mu(&self) -> Character {
        self.mu
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.size()
    }

    /// Root datum of `W_ℝ`: `A` on `n` coordinates for `GL(n,R)`, `C_k` otherwise.
    pub fn weyl_datum(&self) -> &RootDatum {
        &self.datum
    }

    /// `g ↦ μ₀(g)⁻¹ g^{⊗k}` for `g ∈ K`.
    pub fn act_group(&self, g: &CMatrix, v: &[GaussRational]) -> Vector {
        let chi = self.model.character_value(self.model.mu0(), g);
        let inv = chi.inv().expect("character values are units");
        ops::scale(&self.shape.apply_group(g, v), &inv)
    }

    /// `X ↦ Σ_s (X)_s − dμ₀(X)` for `X ∈ k`.
    pub fn act_lie(&self, x: &CMatrix, v: &[GaussRational]) -> Vector {
        let d = self.model.character_differential(self.model.mu0(), x);
        let out = self.shape.apply_derivation(x, v);
        if d.is_zero() {
            out
        } else {
            ops::sub(&out, &ops::scale(v, &d))
        }
    }

    /// `π_k(s_{i,j}) = −R_{i,j}`.
    pub fn pi_transposition(&self, i: usize, j: usize, v: &[GaussRational]) -> Vector {
        ops::scale(&self.shape.flip(i, j, v), &GaussRational::from_int(-1))
    }

    /// `π_k(s̄_i)`: multiplication by `−ξ` in slot `i`.
    pub fn pi_sbar(&self, i: usize, v: &[GaussRational]) -> Result<Vector> {
        let xi = self.xi()?;
        Ok(self.shape.apply_slot(i, &xi.neg(), v))
    }

    fn xi(&self) -> Result<&CMatrix> {
        self.model
            .xi()
            .ok_or_else(|| Error::UnsupportedGroup(format!("{} is not an equal-rank group", self.model.group())))
    }

    /// Hecke-side action of a simple reflection of [`Self::weyl_datum`].
    pub fn pi_simple(&self, s: usize, v: &[GaussRational]) -> Result<Vector> {
        let root = &self.datum.simple_roots()[s];
        let nz: Vec<usize> = (0..root.len()).filter(|&i| root[i] != 0).collect();
        match nz.as_slice() {
            [i, j] => Ok(self.pi_transposition(i + 1, j + 1, v)),
            [i] => self.pi_sbar(i + 1, v),
            _ => Err(Error::Other(format!("unexpected simple root {root:?}"))),
        }
    }

    /// Hecke-side action `π_k(w)` of `w ∈ W_ℝ`, through a reduced word.
    pub fn pi_weyl(&self, w: &WeylElement, v: &[GaussRational]) -> Result<Vector> {
        let word = self.datum.reduced_word(w);
        let mut out = v.to_vec();
        for &s in word.iter().rev() {
            out = self.pi_simple(s, &out)?;
        }
        Ok(out)
    }

    /// An element of `K` inducing the simple reflection `s` of `W_ℝ`:
    /// `k_α` for the matching restricted root, or the extra component of
    /// `O(q,q)` for the sign change.
    pub fn k_simple(&self, s: usize) -> Result<CMatrix> {
        let root = &self.datum.simple_roots()[s];
        let target = WeylElement::reflection(root);
        for rv in self.model.simple_roots() {
            if WeylElement::reflection(&rv.alpha) == target {
                return Ok(rv.k.clone());
            }
        }
        if let Some(g) = self.model.extra_component() {
            if self.model.induced_weyl(g).as_ref() == Some(&target) {
                return Ok(g.clone());
            }
        }
        Err(Error::Other(format!("no element of K induces the reflection in {root:?}")))
    }

    /// An element `k_w ∈ K` inducing `w`, as a product of the `k_simple`.
    pub fn k_element(&self, w: &WeylElement) -> Result<CMatrix> {
        let mut g = CMatrix::identity(self.model.dim_v());
        for s in self.datum.reduced_word(w) {
            g = g.mul(&self.k_simple(s)?);
        }
        Ok(g)
    }

    /// Geometric action of `w` on `M`-invariants: `μ₀*(k_w) k_w^{⊗k}`.
    pub fn geometric(&self, w: &WeylElement, v: &[GaussRational]) -> Result<Vector> {
        Ok(self.act_group(&self.k_element(w)?, v))
    }

    /// `π_k(Ω_{i,j})` (or its `k`/`p` part) applied to a vector.
    pub fn omega(&self, i: usize, j: usize, part: Part, v: &[GaussRational]) -> Result<Vector> {
        if i == 0 || j == 0 {
            return Err(Error::Other("position 0 is not part of the tensor model".into()));
        }
        if i == j || i > self.k || j > self.k {
            return Err(Error::Other(format!("bad slot pair ({i},{j}) for k = {}", self.k)));
        }
        if part != Part::Full && self.model.xi().is_none() && self.model.group().family != GroupFamily::GL {
            return Err(Error::UnsupportedGroup(format!("{} has no k/p splitting", self.model.group())));
        }
        let mut out = self.shape.zero();
        for b in self.model.basis() {
            let keep = match part {
                Part::Full => true,
                Part::K => b.in_k,
                Part::P => !b.in_k,
            };
            if keep {
                let t = self.shape.apply_slot(j, &b.dual, v);
                ops::add_into(&mut out, &self.shape.apply_slot(i, &b.matrix, &t));
            }
        }
        Ok(out)
    }

    /// Matrix of `π_k(Ω_{i,j})` on the whole space.
    pub fn omega_matrix(&self, i: usize, j: usize, part: Part) -> Result<CMatrix> {
        self.omega(i, j, part, &self.shape.zero())?;
        Ok(self.shape.matrix_of(|v| self.omega(i, j, part, v).expect("checked")))
    }
}
