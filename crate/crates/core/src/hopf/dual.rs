//! Dual and co-opposite Hopf algebras.

use super::data::{FiniteHopf, Table};
use super::elem::{Acc, Elem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `H*` on the dual basis: products transpose the coproduct and vice versa,
/// `ε_{H*}(b^i) = b^i(1)`, `S_{H*} = S^T`.
pub fn dual_hopf(h: &FiniteHopf) -> FiniteHopf {
    let n = h.dim();
    let mut mult: Vec<Acc> = (0..n * n).map(|_| Acc::new()).collect();
    for u in 0..n {
        for (k, c) in h.comult_basis(u).terms() {
            mult[*k].add(u, c);
        }
    }
    let mut comult: Vec<Acc> = (0..n).map(|_| Acc::new()).collect();
    for k in 0..n * n {
        for (u, c) in h.mul_basis(k / n, k % n).terms() {
            comult[*u].add(k, c);
        }
    }
    let mut antipode: Vec<Acc> = (0..n).map(|_| Acc::new()).collect();
    for v in 0..n {
        for (u, c) in h.antipode_basis(v).terms() {
            antipode[*u].add(v, c);
        }
    }
    let unit = Elem::from_pairs((0..n).map(|u| (u, h.counit_basis(u))));
    let counit = (0..n).map(|u| h.unit().coeff(u)).collect();
    let table = Table {
        mult: mult.into_iter().map(Acc::finish).collect(),
        unit,
        comult: comult.into_iter().map(Acc::finish).collect(),
        counit,
        antipode: antipode.into_iter().map(Acc::finish).collect(),
    };
    let labels = h.labels().iter().map(|l| format!("({l})*")).collect();
    let d = FiniteHopf::from_table(&format!("{}*", h.name()), labels, table, None).expect("consistent shapes");
    if let Some(inv) = (0..n).map(|i| h.antipode_inv_basis(i).cloned()).collect::<Option<Vec<_>>>() {
        let mut t: Vec<Acc> = (0..n).map(|_| Acc::new()).collect();
        for (v, e) in inv.iter().enumerate() {
            for (u, c) in e.terms() {
                t[*u].add(v, c);
            }
        }
        d.set_antipode_inv(t.into_iter().map(Acc::finish).collect());
    }
    d
}

/// `H^cop = (H, Δ^op, S^{-1})`.
pub fn cop(h: &FiniteHopf) -> Result<FiniteHopf> {
    let n = h.dim();
    let sinv = (0..n)
        .map(|i| h.antipode_inv_basis(i).cloned())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotInvertible("antipode".into()))?;
    let mut t = h.to_table();
    t.comult = t.comult.iter().map(|d| d.reindex(|k| (k % n) * n + k / n)).collect();
    let old = std::mem::replace(&mut t.antipode, sinv);
    let gens = h.generators().to_vec();
    let c = FiniteHopf::from_table(&format!("{}^cop", h.name()), h.labels().to_vec(), t, Some(gens))?;
    c.set_antipode_inv(old);
    Ok(c)
}

/// Evaluation `⟨φ, x⟩` of a dual-basis element against an element of `H`.
pub fn evaluate(phi: &Elem, x: &Elem) -> Scalar {
    phi.terms().iter().fold(Scalar::zero(), |acc, (i, c)| &acc + &(c * &x.coeff(*i)))
}

#[cfg(test)]
mod tests {
    use super::super::axioms::verify_hopf_axioms;
    use super::super::zoo::*;
    use super::*;

    #[test]
    fn double_dual_is_entrywise_identity() {
        for h in [build_taft(3, &root_of_unity(3).unwrap()).unwrap(), build_nichols(2).unwrap(), build_group_algebra(&GroupTable::symmetric3())] {
            assert!(dual_hopf(&dual_hopf(&h)).same_structure(&h), "{}", h.name());
            let c = cop(&h).unwrap();
            assert!(cop(&c).unwrap().same_structure(&h));
            assert!(verify_hopf_axioms(&dual_hopf(&h)).passed);
            assert!(verify_hopf_axioms(&c).passed);
        }
    }

    #[test]
    fn dual_group_algebra_is_function_algebra() {
        for g in [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()] {
            assert!(dual_hopf(&build_group_algebra(&g)).same_structure(&build_function_algebra(&g)));
        }
    }
}
