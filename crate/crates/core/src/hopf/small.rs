//! The small quantum group `u_q(sl2)` at an odd root of unity, obtained from
//! the double of `u_q(b+)` by identifying the two copies of `K`.

use super::data::FiniteHopf;
use super::double::{drinfeld_double, Double};
use super::elem::Elem;
use super::pairing::canonical_taft_pairing;
use super::quotient::{hopf_quotient, Quotient};
use super::zoo::uq_root;
use crate::error::{Error, Result};
use crate::scalar::{q_factorial_at, Scalar};

pub struct SmallQuantumGroup {
    pub ell: usize,
    pub q: Scalar,
    pub double: Double,
    pub quotient: Quotient,
    /// Images of `K₊`, `e`, `f` in the quotient.
    pub k: Elem,
    pub e: Elem,
    pub f: Elem,
    /// `(π⊗π)` of the canonical R-matrix of the double.
    pub r: Elem,
}

impl SmallQuantumGroup {
    pub fn hopf(&self) -> &FiniteHopf {
        &self.quotient.hopf
    }

    /// `Θ · Σ_{k<ℓ} q^{k(k−1)/2} (q − q⁻¹)^k / [k]! e^k ⊗ f^k` with
    /// `Θ = (1/ℓ) Σ_{i,j} q^{−2ij} K^i ⊗ K^j`, evaluated in the quotient.
    pub fn closed_form_r(&self) -> Elem {
        closed_form_r(self.hopf(), self.ell, &self.q, &self.k, &self.e, &self.f)
    }

    /// `[e, f] = (K − K⁻¹)/(q − q⁻¹)`.
    pub fn ef_relation_holds(&self) -> bool {
        let h = self.hopf();
        let kinv = h.pow(&self.k, self.ell as u32 - 1);
        let rhs = self.k.sub(&kinv).scale(&(&self.q - &self.q.inv()).inv());
        h.commutator(&self.e, &self.f) == rhs
    }
}

pub fn closed_form_r(h: &FiniteHopf, ell: usize, q: &Scalar, k: &Elem, e: &Elem, f: &Elem) -> Elem {
    let kp: Vec<Elem> = (0..ell as u32).map(|i| h.pow(k, i)).collect();
    let mut theta = Elem::zero();
    for i in 0..ell {
        for j in 0..ell {
            let c = &q.pow(-2 * (i * j) as i64) * &Scalar::frac(1, ell as i64);
            theta = theta.add(&h.tensor(&[&kp[i], &kp[j]]).scale(&c));
        }
    }
    let d = q - &q.inv();
    let mut sum = Elem::zero();
    for m in 0..ell as i64 {
        let fact = q_factorial_at(m, q).expect("[k]! invertible below ell");
        let c = &(&q.pow(m * (m - 1) / 2) * &d.pow(m)) * &fact.inv();
        let (em, fm) = (h.pow(e, m as u32), h.pow(f, m as u32));
        sum = sum.add(&h.tensor(&[&em, &fm]).scale(&c));
    }
    h.tensor_mul(2, &theta, &sum)
}

/// `u_q(sl2)` of dimension `ℓ³` with its pushed-forward R-matrix.
pub fn small_quantum_group(ell: usize) -> Result<SmallQuantumGroup> {
    let q = uq_root(ell)?;
    let pairing = canonical_taft_pairing(ell)?;
    let double = drinfeld_double(&pairing.h)?;
    let d = &double.hopf;
    let n = pairing.h.dim();
    // (·, y) for y ∈ u_q(b-) as an element of the dual basis of u_q(b+)
    let iota = |y: &Elem| {
        let mut phi = Elem::zero();
        for (j, c) in y.terms() {
            phi = phi.add(&Elem::from_dense(&pairing.matrix.column(*j)).scale(c));
        }
        debug_assert!(phi.max_index().is_none_or(|m| m < n));
        phi
    };
    let kp = double.embed_h(&pairing.h.b("K"));
    let e = double.embed_h(&pairing.h.b("e"));
    let km = double.embed_dual(&iota(&pairing.k.b("K")));
    let f = double.embed_dual(&iota(&pairing.k.b("f")));
    let kc = d.mul(&kp, &d.pow(&km, ell as u32 - 1));
    if !d.is_grouplike(&kc) || !d.is_central(&kc) {
        return Err(Error::Axiom("K₊K₋⁻¹ is not a central grouplike".into()));
    }
    let quotient = hopf_quotient(d, &[kc.sub(d.unit())])?;
    if quotient.hopf.dim() != ell * ell * ell {
        return Err(Error::Dimension(format!("quotient has dim {}, expected {}", quotient.hopf.dim(), ell * ell * ell)));
    }
    let r = quotient.project_tensor(&double.r, 2);
    let (k, e, f) = (quotient.project(&kp), quotient.project(&e), quotient.project(&f));
    Ok(SmallQuantumGroup { ell, q, double, quotient, k, e, f, r })
}
