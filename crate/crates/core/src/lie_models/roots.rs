use super::util::kernel_combinations;
use super::{exp_pi_half, CMatrix, LieModel};
use crate::error::{Error, Result};
use num_traits::Zero;

use crate::exact_kernel::{int, rational_sqrt, ExactMatrix, GaussRational, Rational, Ring};
use crate::root_data::{GroupDescriptor, GroupFamily};

/// A simple restricted root with its normalized root vector `X_α`,
/// `Z_α = X_α + θX_α` and `k_α = exp(πZ_α/2)`.
#[derive(Clone, Debug)]
pub struct RestrictedRootVector {
    pub alpha: Vec<i64>,
    pub x: CMatrix,
    pub z: CMatrix,
    pub k: CMatrix,
}

/// Simple roots of the reduced restricted root system, in Hecke order.
pub fn simple_restricted_roots(g: &GroupDescriptor, k: usize) -> Vec<Vec<i64>> {
    let unit = |i: usize| (0..k).map(|j| i64::from(j == i)).collect::<Vec<i64>>();
    let mut out: Vec<Vec<i64>> = (0..k.saturating_sub(1))
        .map(|i| unit(i).iter().zip(unit(i + 1)).map(|(a, b)| a - b).collect())
        .collect();
    let last = match g.family {
        GroupFamily::GL => None,
        GroupFamily::U | GroupFamily::O if g.p > g.q => Some(unit(k - 1)),
        GroupFamily::U | GroupFamily::Sp => Some(unit(k - 1).iter().map(|x| 2 * x).collect()),
        GroupFamily::O => Some(unit(k - 2).iter().zip(unit(k - 1)).map(|(a, b)| a + b).collect()),
    };
    out.extend(last);
    out
}

/// Complex basis of the restricted root space `g_α`.
pub fn root_space(model: &LieModel, alpha: &[i64]) -> Vec<CMatrix> {
    let all: Vec<CMatrix> = model.basis().iter().map(|b| b.matrix.clone()).collect();
    kernel_combinations(&all, |x| {
        model
            .a()
            .iter()
            .zip(alpha)
            .map(|(h, &c)| h.commutator(x).sub(&x.scale(&GaussRational::from_int(c))))
            .collect()
    })
}

/// All restricted roots with their multiplicities `dim g_α`.
pub fn restricted_roots(model: &LieModel) -> Vec<(Vec<i64>, usize)> {
    let k = model.rank();
    let mut out = Vec::new();
    let mut alpha = vec![-2i64; k];
    loop {
        if alpha.iter().any(|&x| x != 0) {
            let d = root_space(model, &alpha).len();
            if d > 0 {
                out.push((alpha.clone(), d));
            }
        }
        let mut i = 0;
        while i < k && alpha[i] == 2 {
            alpha[i] = -2;
            i += 1;
        }
        if i == k {
            break;
        }
        alpha[i] += 1;
    }
    out
}

/// Class label of a root: `e_i-e_j`, `e_i+e_j`, `e_i` or `2e_i`.
pub fn root_class(alpha: &[i64]) -> &'static str {
    let nz: Vec<i64> = alpha.iter().copied().filter(|&x| x != 0).collect();
    match nz.as_slice() {
        [a, b] if a * b < 0 => "e_i-e_j",
        [_, _] => "e_i+e_j",
        [a] if a.abs() == 1 => "e_i",
        _ => "2e_i",
    }
}

/// `‖α‖²` for the form induced by `κ` on `a*`.
pub fn root_norm_sq(model: &LieModel, alpha: &[i64]) -> Rational {
    let a = model.a();
    let gram = ExactMatrix::from_fn(a.len(), a.len(), |i, j| model.kappa(&a[i], &a[j]).re);
    let inv = gram.inverse().expect("κ nondegenerate on a");
    let v: Vec<Rational> = alpha.iter().map(|&x| int(x)).collect();
    let w = inv.apply(&v);
    v.iter().zip(&w).map(|(x, y)| x * y).sum()
}

pub(super) fn root_vector(model: &LieModel, alpha: &[i64]) -> Result<RestrictedRootVector> {
    let target = -int(2) / root_norm_sq(model, alpha);
    let mut cands = Vec::new();
    for y in root_space(model, alpha) {
        let t = model.tau(&y);
        cands.push(y.add(&t));
        cands.push(y.sub(&t).scale(&GaussRational::i()));
    }
    cands.retain(|c| !c.is_zero());
    let singles = cands.clone();
    for i in 0..singles.len() {
        for j in i + 1..singles.len() {
            cands.push(singles[i].add(&singles[j]));
        }
    }
    for x in cands {
        let s = model.kappa(&x, &model.theta(&x));
        if !s.is_real() || s.is_zero() {
            continue;
        }
        if let Some(t) = rational_sqrt(&(target.clone() / s.re)) {
            let mut x = x.scale(&GaussRational::real(t));
            let mut z = x.add(&model.theta(&x));
            if z.entries().iter().find(|e| !e.is_zero()).is_some_and(|e| if e.re.is_zero() { e.im < Rational::zero() } else { e.re < Rational::zero() }) {
                x = x.neg();
                z = z.neg();
            }
            let k = exp_pi_half(&z)?;
            return Ok(RestrictedRootVector { alpha: alpha.to_vec(), x, z, k });
        }
    }
    Err(Error::Other(format!("no rational normalization of X_α for α = {alpha:?} in {}", model.group())))
}

