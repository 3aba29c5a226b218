//! The normalized trigonometric R-matrix on `V(z)⊗V(w)`.

use super::eval::eval_rep;
use super::q;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::flip;
use crate::scalar::Scalar;

/// `R̄(z)` in the basis `v₊⊗v₊, v₊⊗v₋, v₋⊗v₊, v₋⊗v₋`. Rejects `z = q^{±2}`,
/// the poles of `R̄` and `R̄⁻¹`.
pub fn trig_r_matrix(z: &Scalar) -> Result<Matrix> {
    let q = q();
    let q2 = q.pow(2);
    if *z == q2 {
        return Err(Error::Pole(format!("R(z) has a pole at z = {q2}")));
    }
    if *z == q2.inv() {
        return Err(Error::Pole(format!("R(z)^-1 has a pole at z = {}", q2.inv())));
    }
    let den = (z - &q2).inv();
    let one = Scalar::one();
    let diag = &(&q * &(z - &one)) * &den;
    let up = &(&one - &q2) * &den;
    let low = &(z * &(&one - &q2)) * &den;
    let o = Scalar::zero();
    Ok(Matrix::from_rows(vec![
        vec![one.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), diag.clone(), up, o.clone()],
        vec![o.clone(), low, diag, o.clone()],
        vec![o.clone(), o.clone(), o, one],
    ]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    pub unitarity: bool,
    pub qybe: bool,
    pub intertwiner: bool,
}

impl SpectralReport {
    pub fn all(&self) -> bool {
        self.unitarity && self.qybe && self.intertwiner
    }
}

/// `R̄(z)R̄²¹(z⁻¹) = 1`.
pub fn unitarity_holds(r: impl Fn(&Scalar) -> Result<Matrix>) -> Result<bool> {
    let z = Scalar::var("z");
    let p = flip(2, 2);
    Ok(r(&z)?.mul(&p.mul(&r(&z.inv())?).mul(&p)).is_identity())
}

/// `R¹²(z₁/z₂)R¹³(z₁/z₃)R²³(z₂/z₃) = R²³R¹³R¹²` on `(ℂ²)^{⊗3}`.
pub fn spectral_qybe_holds(r: impl Fn(&Scalar) -> Result<Matrix>) -> Result<bool> {
    let (z1, z2, z3) = (Scalar::var("z1"), Scalar::var("z2"), Scalar::var("z3"));
    let i2 = Matrix::identity(2);
    let p23 = i2.kron(&flip(2, 2));
    let r12 = r(&(&z1 / &z2))?.kron(&i2);
    let r13 = p23.mul(&r(&(&z1 / &z3))?.kron(&i2)).mul(&p23);
    let r23 = i2.kron(&r(&(&z2 / &z3))?);
    Ok(r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12))
}

/// `P∘R̄(z/w): V(z)⊗V(w) → V(w)⊗V(z)` commutes with all six generators.
pub fn intertwiner_holds(r: impl Fn(&Scalar) -> Result<Matrix>) -> Result<bool> {
    let (z, w) = (Scalar::var("z"), Scalar::var("w"));
    let (vz, vw) = (eval_rep(1, &z)?, eval_rep(1, &w)?);
    let c = flip(2, 2).mul(&r(&(&z / &w))?);
    Ok(vz.tensor(&vw)?.is_intertwiner(&c, &vw.tensor(&vz)?))
}

pub fn spectral_checks() -> Result<SpectralReport> {
    Ok(SpectralReport { unitarity: unitarity_holds(trig_r_matrix)?, qybe: spectral_qybe_holds(trig_r_matrix)?, intertwiner: intertwiner_holds(trig_r_matrix)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_entries() {
        let z = Scalar::var("z");
        let r = trig_r_matrix(&z).unwrap();
        let p = |s: &str| Scalar::parse(s).unwrap();
        assert_eq!(r[(1, 1)], p("q*(z-1)/(z-q^2)"));
        assert_eq!(r[(1, 2)], p("(1-q^2)/(z-q^2)"));
        assert_eq!(r[(2, 1)], p("z*(1-q^2)/(z-q^2)"));
        assert_eq!(r[(2, 2)], r[(1, 1)]);
        assert!(r[(0, 0)].is_one() && r[(3, 3)].is_one());
        assert_eq!(trig_r_matrix(&Scalar::one()).unwrap(), flip(2, 2));
        // substituting into the symbolic matrix also hits the pole
        assert!(matches!(r.substitute(z.vars()[0], &q().pow(2)), Err(Error::Pole(_))));
        assert!(matches!(trig_r_matrix(&q().pow(2)), Err(Error::Pole(_))));
        assert!(matches!(trig_r_matrix(&q().pow(-2)), Err(Error::Pole(_))));
    }

    #[test]
    fn all_checks() {
        let rep = spectral_checks().unwrap();
        assert!(rep.all(), "{rep:?}");
    }

    #[test]
    fn identity_is_not_an_intertwiner() {
        assert!(!intertwiner_holds(|_| Ok(Matrix::identity(4))).unwrap());
        assert!(unitarity_holds(|_| Ok(flip(2, 2))).unwrap());
    }
}
