//! Quasitriangular structures: the axioms for `R ∈ H⊗H` and the QYBE.

use super::data::{subalgebra_span, FiniteHopf};
use super::elem::Elem;
use crate::linalg::Matrix;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiReport {
    pub invertible: bool,
    pub intertwines_coproduct: bool,
    pub hexagon_left: bool,
    pub hexagon_right: bool,
    pub qybe: bool,
    pub inverse_is_antipode: bool,
}

impl QuasiReport {
    pub fn all_passed(&self) -> bool {
        self.invertible && self.intertwines_coproduct && self.hexagon_left && self.hexagon_right && self.qybe && self.inverse_is_antipode
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        for (ok, name) in [
            (self.invertible, "invertible"),
            (self.intertwines_coproduct, "intertwines_coproduct"),
            (self.hexagon_left, "hexagon_left"),
            (self.hexagon_right, "hexagon_right"),
            (self.qybe, "qybe"),
            (self.inverse_is_antipode, "inverse_is_antipode"),
        ] {
            if !ok {
                v.push(name);
            }
        }
        v
    }
}

/// `R^{12}, R^{13}, R^{23}` in `H^{⊗3}`.
pub fn r_legs(h: &FiniteHopf, r: &Elem) -> (Elem, Elem, Elem) {
    (h.insert_unit(r, 2, 2), h.insert_unit(r, 2, 1), h.insert_unit(r, 2, 0))
}

fn is_two_sided_inverse(h: &FiniteHopf, r: &Elem, x: &Elem) -> bool {
    let one = h.tensor_unit(2);
    h.tensor_mul(2, r, x) == one && h.tensor_mul(2, x, r) == one
}

/// Invertibility of `R` in `H⊗H`: tries `(S⊗id)R` and `(id⊗S^{-1})R`, then
/// solves the linear system when `dim(H)² ≤ 256`.
pub fn r_invertible(h: &FiniteHopf, r: &Elem) -> bool {
    let s1 = h.map_slot(r, 2, 0, 1, |b| h.antipode_basis(b).clone());
    if is_two_sided_inverse(h, r, &s1) {
        return true;
    }
    let n = h.dim();
    if (0..n).all(|b| h.antipode_inv_basis(b).is_some()) {
        let s2 = h.map_slot(r, 2, 1, 1, |b| h.antipode_inv_basis(b).cloned().expect("checked"));
        if is_two_sided_inverse(h, r, &s2) {
            return true;
        }
    }
    let big = n * n;
    if big > 256 {
        return false;
    }
    let cols: Vec<Vec<_>> = (0..big).map(|j| h.tensor_mul(2, r, &Elem::basis(j)).to_dense(big)).collect();
    let m = Matrix::from_columns(&cols);
    match m.solve(&h.tensor_unit(2).to_dense(big)) {
        Some(x) => is_two_sided_inverse(h, r, &Elem::from_dense(&x)),
        None => false,
    }
}

/// Runs the five checks independently. `RΔ(x) = Δ^op(x)R` is tested on
/// generators, which suffices because both sides are multiplicative in `x`.
pub fn quasitriangular_check(h: &FiniteHopf, r: &Elem) -> QuasiReport {
    let n = h.dim();
    let gens: Vec<Elem> = if subalgebra_span(h, h.generators()).rank() == n { h.generators().to_vec() } else { (0..n).map(Elem::basis).collect() };
    let intertwines = gens.iter().all(|x| {
        let d = h.comult(x);
        let dop = h.permute(&d, 2, &[1, 0]);
        h.tensor_mul(2, r, &d) == h.tensor_mul(2, &dop, r)
    });
    let (r12, r13, r23) = r_legs(h, r);
    let hex_l = h.map_slot(r, 2, 0, 2, |b| h.comult_basis(b).clone()) == h.tensor_mul(3, &r13, &r23);
    let hex_r = h.map_slot(r, 2, 1, 2, |b| h.comult_basis(b).clone()) == h.tensor_mul(3, &r13, &r12);
    let lhs = h.tensor_mul(3, &h.tensor_mul(3, &r12, &r13), &r23);
    let rhs = h.tensor_mul(3, &h.tensor_mul(3, &r23, &r13), &r12);
    let s1 = h.map_slot(r, 2, 0, 1, |b| h.antipode_basis(b).clone());
    QuasiReport {
        invertible: r_invertible(h, r),
        intertwines_coproduct: intertwines,
        hexagon_left: hex_l,
        hexagon_right: hex_r,
        qybe: lhs == rhs,
        inverse_is_antipode: is_two_sided_inverse(h, r, &s1),
    }
}
