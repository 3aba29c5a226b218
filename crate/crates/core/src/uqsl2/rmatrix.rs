//! The universal R-matrix on pairs of type-I modules.

use super::modules::{qnum, weight_spaces};
use super::pbw;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{flip, Presentation, Representation};
use crate::scalar::Scalar;

/// `q^{λμ/2}`, needing the square root `s` when `λμ` is odd.
fn half_power(q: &Scalar, lm: i64) -> Result<Scalar> {
    if lm % 2 == 0 {
        return Ok(q.pow(lm / 2));
    }
    let s = pbw::s();
    if *q == s.pow(2) {
        return Ok(s.pow(lm));
    }
    Err(Error::Unsupported(format!("q^({lm}/2) needs a square root of q = {q}")))
}

/// Projectors onto the weight spaces: `(n, P_n)`.
fn weight_projectors(x: &Representation) -> Result<Vec<(i64, Matrix)>> {
    let ws = weight_spaces(x)?;
    let cols: Vec<Vec<Scalar>> = ws.spaces.iter().flat_map(|(_, b)| b.iter().cloned()).collect();
    let b = Matrix::from_columns(&cols);
    let binv = b.inverse().ok_or_else(|| Error::NotInvertible("weight basis".into()))?;
    let mut out = Vec::new();
    let mut at = 0;
    for (n, basis) in &ws.spaces {
        let mut sel = Matrix::zeros(x.dim, x.dim);
        for i in at..at + basis.len() {
            sel[(i, i)] = Scalar::one();
        }
        at += basis.len();
        out.push((*n, b.mul(&sel).mul(&binv)));
    }
    Ok(out)
}

/// `R = q^{H⊗H/2} Σ_k q^{k(k−1)/2} (q − q⁻¹)^k / [k]! e^k ⊗ f^k` acting on `X⊗Y`.
pub fn universal_r_action(x: &Representation, y: &Representation) -> Result<Matrix> {
    if x.presentation != Presentation::Uqsl2 || y.presentation != Presentation::Uqsl2 {
        return Err(Error::Domain("the universal R-matrix acts on U_q(sl2)-modules".into()));
    }
    if x.q != y.q {
        return Err(Error::Domain("deformation parameters differ".into()));
    }
    let q = &x.q;
    let (px, py) = (weight_projectors(x)?, weight_projectors(y)?);
    let mut cartan = Matrix::zeros(x.dim * y.dim, x.dim * y.dim);
    for (l, a) in &px {
        for (m, b) in &py {
            cartan = cartan.add(&a.kron(b).scale(&half_power(q, l * m)?));
        }
    }
    let (e, f) = (x.get("e"), y.get("f"));
    let diff = q - &q.inv();
    let mut theta = Matrix::zeros(x.dim * y.dim, x.dim * y.dim);
    let (mut ek, mut fk) = (Matrix::identity(x.dim), Matrix::identity(y.dim));
    let mut fact = Scalar::one();
    for k in 0..=x.dim.min(y.dim) as i64 {
        if k > 0 {
            ek = ek.mul(e);
            fk = fk.mul(f);
            fact = &fact * &qnum(k, q);
        }
        if ek.is_zero() || fk.is_zero() {
            break;
        }
        let c = &(&q.pow(k * (k - 1) / 2) * &diff.pow(k)) * &fact.inv();
        theta = theta.add(&ek.kron(&fk).scale(&c));
    }
    Ok(cartan.mul(&theta))
}

/// `c_{X,Y} = P ∘ R: X⊗Y → Y⊗X`.
pub fn braiding(x: &Representation, y: &Representation) -> Result<Matrix> {
    Ok(flip(x.dim, y.dim).mul(&universal_r_action(x, y)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidReport {
    pub intertwiner: bool,
    pub hexagon_left: bool,
    pub hexagon_right: bool,
    pub qybe: bool,
    pub braid: bool,
}

impl BraidReport {
    pub fn all(&self) -> bool {
        self.intertwiner && self.hexagon_left && self.hexagon_right && self.qybe && self.braid
    }
}

pub fn braiding_checks(x: &Representation, y: &Representation, z: &Representation) -> Result<BraidReport> {
    let (dx, dy, dz) = (x.dim, y.dim, z.dim);
    let (ix, iy, iz) = (Matrix::identity(dx), Matrix::identity(dy), Matrix::identity(dz));
    let (rxy, rxz, ryz) = (universal_r_action(x, y)?, universal_r_action(x, z)?, universal_r_action(y, z)?);
    let r12 = rxy.kron(&iz);
    let r23 = ix.kron(&ryz);
    let r13 = ix.kron(&flip(dz, dy)).mul(&rxz.kron(&iy)).mul(&ix.kron(&flip(dy, dz)));

    let xy = x.tensor(y)?;
    let yz = y.tensor(z)?;
    let hexagon_left = universal_r_action(&xy, z)? == r13.mul(&r23);
    let hexagon_right = universal_r_action(x, &yz)? == r13.mul(&r12);
    let qybe = r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12);

    let cxy = flip(dx, dy).mul(&rxy);
    let intertwiner = xy.is_intertwiner(&cxy, &y.tensor(x)?);

    let (cxz, cyz) = (flip(dx, dz).mul(&rxz), flip(dy, dz).mul(&ryz));
    let lhs = cyz.kron(&ix).mul(&iy.kron(&cxz)).mul(&cxy.kron(&iz));
    let rhs = iz.kron(&cxy).mul(&cxz.kron(&iy)).mul(&ix.kron(&cyz));
    Ok(BraidReport { intertwiner, hexagon_left, hexagon_right, qybe, braid: lhs == rhs })
}
