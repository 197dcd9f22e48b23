use num_traits::Zero;

use super::pbw::{IwasawaBasis, UEAElement};
use super::xr::TruncatedXR;
use crate::error::Result;
use crate::exact_kernel::{GaussRational, Ring};
use crate::lie_models::CMatrix;
use crate::report::CheckResult;
use crate::tensor_model::{Part, TensorSpace, Vector};

/// `𝒳^ℝ ⊗ μ₀*⊗V^{⊗k}` with `𝒳^ℝ` in position 0, stored as one element of
/// `𝒳^ℝ` per tensor coordinate.
pub type ZeroSlotVector = Vec<UEAElement>;

/// Operators `Ω_{0,j}` and the slot operators of the tensor model on
/// `𝒳^ℝ ⊗ μ₀*⊗V^{⊗k}`.
pub struct ZeroSlotModel {
    ts: TensorSpace,
    xr: TruncatedXR,
}

impl ZeroSlotModel {
    pub fn new(ts: TensorSpace, d: usize) -> Result<Self> {
        let xr = TruncatedXR::new(IwasawaBasis::new(ts.model())?, d);
        Ok(Self { ts, xr })
    }

    pub fn tensor_space(&self) -> &TensorSpace {
        &self.ts
    }

    pub fn xr(&self) -> &TruncatedXR {
        &self.xr
    }

    pub fn zero(&self) -> ZeroSlotVector {
        vec![UEAElement::zero(); self.ts.dim()]
    }

    /// `u ⊗ e_c`.
    pub fn pure(&self, u: &UEAElement, c: usize) -> ZeroSlotVector {
        let mut out = self.zero();
        out[c] = u.clone();
        out
    }

    /// A linear operator on the tensor factor, extended by the identity on
    /// `𝒳^ℝ`.
    pub fn slot_op(&self, op: impl Fn(&[GaussRational]) -> Result<Vector>, x: &ZeroSlotVector) -> Result<ZeroSlotVector> {
        let shape = self.ts.shape();
        let mut out = self.zero();
        for (c, u) in x.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            let col = op(&shape.basis_vector(&shape.digits(c)))?;
            for (r, a) in col.iter().enumerate() {
                if !a.is_zero() {
                    out[r] = out[r].add(&u.scale(a));
                }
            }
        }
        Ok(out)
    }

    /// `Ω_{0,j}` (or its `k`/`p` part): `Σ_b b ⊗ (b*)_j` with `b` acting on
    /// `𝒳^ℝ` by left multiplication.
    pub fn omega0(&self, j: usize, part: Part, x: &ZeroSlotVector) -> Result<ZeroSlotVector> {
        let shape = self.ts.shape();
        let mut out = self.zero();
        for b in self.ts.model().basis() {
            let keep = match part {
                Part::Full => true,
                Part::K => b.in_k,
                Part::P => !b.in_k,
            };
            if !keep {
                continue;
            }
            for (c, u) in x.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                let bu = self.xr.left_mul(&b.matrix, u)?;
                let col = shape.apply_slot(j, &b.dual, &shape.basis_vector(&shape.digits(c)));
                for (r, a) in col.iter().enumerate() {
                    if !a.is_zero() {
                        out[r] = out[r].add(&bu.scale(a));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Ω_{i,j}` for any `0 ≤ i < j`.
    pub fn omega(&self, i: usize, j: usize, x: &ZeroSlotVector) -> Result<ZeroSlotVector> {
        if i == 0 {
            self.omega0(j, Part::Full, x)
        } else {
            self.slot_op(|v| self.ts.omega(i, j, Part::Full, v), x)
        }
    }

    /// `ε_l = Σ_{0≤a<l} Ω_{a,l}`.
    pub fn eps(&self, l: usize, x: &ZeroSlotVector) -> Result<ZeroSlotVector> {
        let mut out = self.zero();
        for a in 0..l {
            out = add(&out, &self.omega(a, l, x)?);
        }
        Ok(out)
    }

    /// Pure vectors `u ⊗ e_c` with `u` a normal word of degree `< d`.
    fn test_vectors(&self) -> Vec<ZeroSlotVector> {
        let words: Vec<_> = self.xr.words().into_iter().filter(|w| w.len() < self.xr.degree_bound()).collect();
        let mut out = Vec::new();
        for w in words {
            for c in 0..self.ts.dim() {
                out.push(self.pure(&UEAElement::word(w.clone()), c));
            }
        }
        out
    }
}

fn add(a: &ZeroSlotVector, b: &ZeroSlotVector) -> ZeroSlotVector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn scale(a: &ZeroSlotVector, c: &GaussRational) -> ZeroSlotVector {
    a.iter().map(|x| x.scale(c)).collect()
}

fn same(a: &ZeroSlotVector, b: &ZeroSlotVector) -> bool {
    a.iter().zip(b).all(|(x, y)| x.terms == y.terms)
}

fn finish(res: CheckResult, out: Result<Option<String>>) -> CheckResult {
    match out {
        Ok(None) => res.with(true, String::new),
        Ok(Some(w)) => res.with(false, || w),
        Err(e) => res.with(false, || e.to_string()),
    }
}

fn params(m: &ZeroSlotModel) -> String {
    format!("k={}, d={}", m.ts.k(), m.xr.degree_bound())
}

/// `π(s̄_j)Ω_{0,j} + Ω_{0,j}π(s̄_j) = 2π(s̄_j)Ω^k_{0,j}` on `𝒳^ℝ_{<d} ⊗
/// μ₀*⊗V^{⊗k}`.
pub fn sbar_position_zero_check(m: &ZeroSlotModel) -> CheckResult {
    let res = CheckResult::new("sbar_position_zero", m.ts.model().group().to_string(), params(m));
    let run = || -> Result<Option<String>> {
        for x in m.test_vectors() {
            for j in 1..=m.ts.k() {
                let sbar = |y: &ZeroSlotVector| m.slot_op(|v| m.ts.pi_sbar(j, v), y);
                let lhs = add(&sbar(&m.omega0(j, Part::Full, &x)?)?, &m.omega0(j, Part::Full, &sbar(&x)?)?);
                let rhs = scale(&sbar(&m.omega0(j, Part::K, &x)?)?, &GaussRational::from_int(2));
                if !same(&lhs, &rhs) {
                    return Ok(Some(format!("fails at j = {j}")));
                }
            }
        }
        Ok(None)
    };
    finish(res, run())
}

/// `s_{i,i+1}ε_i − ε_{i+1}s_{i,i+1} = −Ω_{i,i+1}s_{i,i+1}` for the partial
/// sums `ε_l = Σ_{0≤a<l} Ω_{a,l}`, position 0 included.
pub fn partial_sum_position_zero_check(m: &ZeroSlotModel) -> CheckResult {
    let res = CheckResult::new("partial_sum_position_zero", m.ts.model().group().to_string(), params(m));
    let run = || -> Result<Option<String>> {
        for x in m.test_vectors() {
            for i in 1..m.ts.k() {
                let s = |y: &ZeroSlotVector| m.slot_op(|v| Ok(m.ts.pi_transposition(i, i + 1, v)), y);
                let lhs = add(&s(&m.eps(i, &x)?)?, &scale(&m.eps(i + 1, &s(&x)?)?, &GaussRational::from_int(-1)));
                let rhs = scale(&m.omega(i, i + 1, &s(&x)?)?, &GaussRational::from_int(-1));
                if !same(&lhs, &rhs) {
                    return Ok(Some(format!("fails at i = {i}")));
                }
            }
        }
        Ok(None)
    };
    finish(res, run())
}

/// `Ω_{0,j}` commutes with the diagonal action of `k` on `𝒳^ℝ ⊗
/// μ₀*⊗V^{⊗k}`.
pub fn zero_slot_k_commutation_check(m: &ZeroSlotModel) -> CheckResult {
    let res = CheckResult::new("zero_slot_k_commutation", m.ts.model().group().to_string(), params(m));
    let diag = |z: &CMatrix, y: &ZeroSlotVector| -> Result<ZeroSlotVector> {
        let left: ZeroSlotVector = y.iter().map(|u| m.xr.left_mul(z, u)).collect::<Result<_>>()?;
        Ok(add(&left, &m.slot_op(|v| Ok(m.ts.act_lie(z, v)), y)?))
    };
    let run = || -> Result<Option<String>> {
        let d = m.xr.degree_bound();
        for x in m.test_vectors().into_iter().filter(|x| x.iter().all(|u| u.degree() + 2 <= d)) {
            for z in m.ts.model().k_basis() {
                for j in 1..=m.ts.k() {
                    let a = m.omega0(j, Part::Full, &diag(&z, &x)?)?;
                    let b = diag(&z, &m.omega0(j, Part::Full, &x)?)?;
                    if !same(&a, &b) {
                        return Ok(Some(format!("fails at j = {j}")));
                    }
                }
            }
        }
        Ok(None)
    };
    finish(res, run())
}
