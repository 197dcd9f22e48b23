use num_traits::ToPrimitive;

use super::CMatrix;
use crate::error::{Error, Result};
use crate::exact_kernel::{int, Field, GaussRational, Ring};

/// `exp(πZ/2)` for a semisimple `Z` with spectrum in `iZ`, by Lagrange
/// interpolation of `λ ↦ e^{πλ/2}` on the spectrum.
pub fn exp_pi_half(z: &CMatrix) -> Result<CMatrix> {
    let n = z.rows();
    let frob = z.entries().iter().map(|x| x.norm_sq()).sum::<crate::Rational>().ceil().to_integer().to_i64().ok_or(Error::BadSpectrum)?;
    let bound = (1..).find(|b: &i64| b * b >= frob).unwrap_or(0);
    let id = CMatrix::identity(n);
    let shifted = |m: i64| z.sub(&id.scale(&(GaussRational::i() * GaussRational::from_int(m))));
    let spectrum: Vec<i64> = (-bound..=bound).filter(|&m| shifted(m).rank() < n).collect();
    let mut prod = id.clone();
    for &m in &spectrum {
        prod = prod.mul(&shifted(m));
    }
    if spectrum.is_empty() || !prod.is_zero() {
        return Err(Error::BadSpectrum);
    }
    let mut out = CMatrix::zeros(n, n);
    for &l in &spectrum {
        let mut p = id.clone();
        for &m in spectrum.iter().filter(|&&m| m != l) {
            let denom = GaussRational::i() * GaussRational::real(int(l - m));
            p = p.mul(&shifted(m)).scale(&denom.inv().unwrap());
        }
        out = out.add(&p.scale(&GaussRational::i_pow(l)));
    }
    Ok(out)
}
