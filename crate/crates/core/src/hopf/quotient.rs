//! Quotients by Hopf ideals, on the complement of the ideal's pivots.

use super::data::{subalgebra_span, FiniteHopf, Table};
use super::echelon::Echelon;
use super::elem::{Acc, Elem};
use crate::error::{Error, Result};

pub struct Quotient {
    pub hopf: FiniteHopf,
    pub ideal: Echelon,
    /// Parent basis indices kept as the quotient basis.
    pub complement: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Quotient {
    /// Image of a parent element in quotient coordinates.
    pub fn project(&self, x: &Elem) -> Elem {
        self.ideal.reduce(x).reindex(|i| self.position[i].expect("normal forms avoid pivots"))
    }

    /// Image of a `k`-fold parent tensor.
    pub fn project_tensor(&self, x: &Elem, k: usize) -> Elem {
        let n = self.position.len();
        let m = self.complement.len();
        let mut cur = x.clone();
        for slot in 0..k {
            // slot `slot` of a mixed tensor: earlier slots already have dim m
            let mut acc = Acc::new();
            let tail = n.pow((k - slot - 1) as u32);
            for (i, c) in cur.terms() {
                let head = i / (tail * n);
                let b = (i / tail) % n;
                let rest = i % tail;
                for (j, d) in self.project(&Elem::basis(b)).terms() {
                    acc.add((head * m + j) * tail + rest, &(c * d));
                }
            }
            cur = acc.finish();
        }
        cur
    }
}

pub const DEFAULT_CAP_FACTOR: usize = 4;

pub fn hopf_quotient(h: &FiniteHopf, gens: &[Elem]) -> Result<Quotient> {
    hopf_quotient_with_cap(h, gens, DEFAULT_CAP_FACTOR * h.dim())
}

/// Closes `gens` to a two-sided ideal by multiplying with algebra generators
/// on both sides; `cap` bounds the number of processed vectors.
pub fn hopf_quotient_with_cap(h: &FiniteHopf, gens: &[Elem], cap: usize) -> Result<Quotient> {
    let n = h.dim();
    let alg_gens: Vec<Elem> = if subalgebra_span(h, h.generators()).rank() == n { h.generators().to_vec() } else { (0..n).map(Elem::basis).collect() };
    let mut ideal = Echelon::new();
    let mut queue: Vec<Elem> = Vec::new();
    for g in gens {
        if ideal.insert(g) {
            queue.push(g.clone());
        }
    }
    let mut processed = 0;
    while let Some(v) = queue.pop() {
        processed += 1;
        if processed > cap {
            return Err(Error::Domain(format!("ideal saturation exceeded cap {cap}")));
        }
        for g in &alg_gens {
            for w in [h.mul(g, &v), h.mul(&v, g)] {
                if ideal.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    if ideal.rows().iter().any(|v| !h.counit(v).is_zero()) {
        return Err(Error::NotHopfIdeal("counit does not vanish on the ideal".into()));
    }
    let complement = ideal.complement(n);
    let mut position = vec![None; n];
    for (k, &c) in complement.iter().enumerate() {
        position[c] = Some(k);
    }
    let m = complement.len();
    let proj = |x: &Elem| ideal.reduce(x).reindex(|i| position[i].expect("normal forms avoid pivots"));
    let proj2 = |x: &Elem| {
        let mut acc = Acc::new();
        for (k, c) in x.terms() {
            let (a, b) = (proj(&Elem::basis(k / n)), proj(&Elem::basis(k % n)));
            for (i, x1) in a.terms() {
                for (j, x2) in b.terms() {
                    acc.add(i * m + j, &(&(c * x1) * x2));
                }
            }
        }
        acc.finish()
    };
    for v in ideal.rows() {
        if !proj2(&h.comult(v)).is_zero() {
            return Err(Error::NotHopfIdeal("coproduct leaves I⊗H + H⊗I".into()));
        }
        if !proj(&h.antipode(v)).is_zero() {
            return Err(Error::NotHopfIdeal("antipode does not preserve the ideal".into()));
        }
    }
    let mut mult = Vec::with_capacity(m * m);
    for &a in &complement {
        for &b in &complement {
            mult.push(proj(h.mul_basis(a, b)));
        }
    }
    let table = Table {
        mult,
        unit: proj(h.unit()),
        comult: complement.iter().map(|&a| proj2(h.comult_basis(a))).collect(),
        counit: complement.iter().map(|&a| h.counit_basis(a)).collect(),
        antipode: complement.iter().map(|&a| proj(h.antipode_basis(a))).collect(),
    };
    let labels = complement.iter().map(|&a| h.labels()[a].clone()).collect();
    let qgens = alg_gens.iter().map(&proj).collect();
    let hopf = FiniteHopf::from_table(&format!("{}/I", h.name()), labels, table, Some(qgens))?;
    let sinv = complement.iter().map(|&a| h.antipode_inv_basis(a).map(&proj)).collect::<Option<Vec<_>>>();
    if let Some(s) = sinv {
        hopf.set_antipode_inv(s);
    }
    Ok(Quotient { hopf, ideal, complement, position })
}

#[cfg(test)]
mod tests {
    use super::super::axioms::verify_hopf_axioms;
    use super::super::zoo::*;
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn z4_mod_g2_minus_one_is_z2() {
        let h = build_group_algebra(&GroupTable::cyclic(4));
        let g2 = h.b("g^2").sub(h.unit());
        let q = hopf_quotient(&h, &[g2]).unwrap();
        assert_eq!(q.hopf.dim(), 2);
        assert!(verify_hopf_axioms(&q.hopf).passed);
        let z2 = build_group_algebra(&GroupTable::cyclic(2));
        assert!(q.hopf.same_structure(&z2));
    }

    #[test]
    fn non_coideal_generator_rejected() {
        // 1 + ζ⁻¹g + ζ⁻²g² projects onto one nontrivial character; ε vanishes
        // but the characters kept do not form a subgroup
        let t = build_taft(3, &root_of_unity(3).unwrap()).unwrap();
        let z = root_of_unity(3).unwrap();
        let p = t.unit().add(&t.b("g").scale(&z.inv())).add(&t.b("g^2").scale(&z.pow(-2)));
        assert!(t.counit(&p).is_zero());
        let err = hopf_quotient(&t, &[p]);
        assert!(matches!(err, Err(Error::NotHopfIdeal(_))));
    }

    #[test]
    fn taft_mod_x_is_group_algebra() {
        let t = build_taft(3, &root_of_unity(3).unwrap()).unwrap();
        let q = hopf_quotient(&t, &[t.b("x")]).unwrap();
        assert_eq!(q.hopf.dim(), 3);
        assert!(verify_hopf_axioms(&q.hopf).passed);
        assert!(q.hopf.same_structure(&build_group_algebra(&GroupTable::cyclic(3))));
        let k = hopf_quotient(&t, &[t.b("g").sub(t.unit())]).unwrap();
        assert_eq!(k.hopf.dim(), 1);
        let bad = hopf_quotient(&t, &[t.unit().scale(&Scalar::int(2))]);
        assert!(matches!(bad, Err(Error::NotHopfIdeal(_))));
    }
}
