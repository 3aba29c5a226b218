//! The Drinfeld double `D(H) = H ⊗ H^{*cop}` with lazily computed structure.
//!
//! A basis element `a_i ⊗ b^k` (index `i*n + k`) stands for the product
//! `a_i · b^k`, with `b^k` the dual basis. Reordering `b^k · a_m` uses the
//! straightening table, after which products are read off from `H` and `H*`.

use super::data::{FiniteHopf, Inner};
use super::dual::dual_hopf;
use super::elem::{Acc, Elem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::sync::OnceLock;

/// Rule used to move a functional past an element of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Straightening {
    /// `φ·x = Σ x₍₂₎ · φ(x₍₃₎ · _ · S⁻¹x₍₁₎)`; compatible with `R = Σ aᵢ⊗aⁱ`.
    Standard,
    /// `φ·x = Σ x₍₂₎ · φ(x₍₃₎ · S(_) · x₍₁₎)`, the other placement of the
    /// antipode, kept for comparison.
    Antipodal,
}

#[derive(Clone)]
pub(crate) struct DoubleData {
    pub n: usize,
    pub h: FiniteHopf,
    pub hd: FiniteHopf,
    straight: Vec<Elem>,
    unit: Elem,
    mult: Vec<OnceLock<Elem>>,
    comult: Vec<OnceLock<Elem>>,
    antipode: Vec<OnceLock<Elem>>,
    antipode_inv: Vec<OnceLock<Elem>>,
}

impl DoubleData {
    fn new(h: FiniteHopf, rule: Straightening) -> Result<Self> {
        let n = h.dim();
        let sinv: Vec<Elem> = (0..n)
            .map(|i| h.antipode_inv_basis(i).cloned())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotInvertible("antipode of H".into()))?;
        let hd = dual_hopf(&h);
        let mut acc: Vec<Acc> = (0..n * n).map(|_| Acc::new()).collect();
        for m in 0..n {
            let d = h.comult_basis(m);
            let d2 = h.map_slot(d, 2, 0, 2, |b| h.comult_basis(b).clone());
            for (t, c) in d2.terms() {
                let (p, q, r) = (t / (n * n), (t / n) % n, t % n);
                for z in 0..n {
                    let w = match rule {
                        Straightening::Standard => h.mul(&h.mul(&Elem::basis(r), &Elem::basis(z)), &sinv[p]),
                        Straightening::Antipodal => h.mul(&h.mul(&Elem::basis(r), h.antipode_basis(z)), &Elem::basis(p)),
                    };
                    for (k, x) in w.terms() {
                        acc[k * n + m].add(q * n + z, &(c * x));
                    }
                }
            }
        }
        let straight = acc.into_iter().map(Acc::finish).collect();
        let mut unit = Acc::new();
        for (a, c) in h.unit().terms() {
            for u in 0..n {
                unit.add(a * n + u, &(c * &h.counit_basis(u)));
            }
        }
        let big = n * n;
        Ok(DoubleData {
            n,
            h,
            hd,
            straight,
            unit: unit.finish(),
            mult: (0..big * big).map(|_| OnceLock::new()).collect(),
            comult: (0..big).map(|_| OnceLock::new()).collect(),
            antipode: (0..big).map(|_| OnceLock::new()).collect(),
            antipode_inv: (0..big).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    /// `b^k · a_m` in the basis of `D`.
    pub fn straighten(&self, k: usize, m: usize) -> &Elem {
        &self.straight[k * self.n + m]
    }

    /// `a · (Σ T) · φ` for `a ∈ H`, `φ ∈ H*` given by basis indices.
    fn sandwich(&self, i: usize, t: &Elem, l: usize) -> Elem {
        let n = self.n;
        let mut acc = Acc::new();
        for (qz, c) in t.terms() {
            let (q, z) = (qz / n, qz % n);
            let left = self.h.mul_basis(i, q);
            let right = self.hd.mul_basis(z, l);
            for (x, a) in left.terms() {
                for (y, b) in right.terms() {
                    acc.add(x * n + y, &(&(c * a) * b));
                }
            }
        }
        acc.finish()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        let big = self.n * self.n;
        self.mult[i * big + j].get_or_init(|| {
            let n = self.n;
            let (a, k, m, l) = (i / n, i % n, j / n, j % n);
            self.sandwich(a, self.straighten(k, m), l)
        })
    }

    /// Product `φ · x` of a functional and an element of `H`.
    fn fun_times_elem(&self, phi: &Elem, x: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (k, a) in phi.terms() {
            for (m, b) in x.terms() {
                acc.add_scaled(self.straighten(*k, *m), &(a * b));
            }
        }
        acc.finish()
    }

    pub fn comult_basis(&self, i: usize) -> &Elem {
        self.comult[i].get_or_init(|| {
            let n = self.n;
            let big = n * n;
            let (a, k) = (i / n, i % n);
            let mut acc = Acc::new();
            for (xx, c) in self.h.comult_basis(a).terms() {
                let (x1, x2) = (xx / n, xx % n);
                for (st, d) in self.hd.comult_basis(k).terms() {
                    // H^{*cop}: the flip of the coproduct of H*
                    let (y2, y1) = (st / n, st % n);
                    acc.add((x1 * n + y1) * big + x2 * n + y2, &(c * d));
                }
            }
            acc.finish()
        })
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        let n = self.n;
        &self.h.counit_basis(i / n) * &self.h.unit().coeff(i % n)
    }

    pub fn antipode_basis(&self, i: usize) -> &Elem {
        self.antipode[i].get_or_init(|| {
            let n = self.n;
            let (a, k) = (i / n, i % n);
            let psi = self.hd.antipode_inv_basis(k).expect("dual antipode invertible").clone();
            self.fun_times_elem(&psi, self.h.antipode_basis(a))
        })
    }

    pub fn antipode_inv_basis(&self, i: usize) -> &Elem {
        self.antipode_inv[i].get_or_init(|| {
            let n = self.n;
            let (a, k) = (i / n, i % n);
            let psi = self.hd.antipode_basis(k).clone();
            self.fun_times_elem(&psi, self.h.antipode_inv_basis(a).expect("antipode invertible"))
        })
    }
}

/// Result of doubling: the algebra, its canonical R-matrix and the embeddings.
pub struct Double {
    pub hopf: FiniteHopf,
    pub r: Elem,
}

impl Double {
    fn data(&self) -> &DoubleData {
        match &self.hopf.inner {
            Inner::Double(d) => d,
            Inner::Table(_) => unreachable!("double is lazy"),
        }
    }

    pub fn base(&self) -> &FiniteHopf {
        &self.data().h
    }

    pub fn dual(&self) -> &FiniteHopf {
        &self.data().hd
    }

    /// `a ↦ a ⊗ ε`.
    pub fn embed_h(&self, a: &Elem) -> Elem {
        embed_h(self.data(), a)
    }

    /// `φ ↦ 1 ⊗ φ`.
    pub fn embed_dual(&self, phi: &Elem) -> Elem {
        embed_dual(self.data(), phi)
    }
}

fn embed_h(d: &DoubleData, a: &Elem) -> Elem {
    let n = d.n;
    let mut acc = Acc::new();
    for (i, c) in a.terms() {
        for u in 0..n {
            acc.add(i * n + u, &(c * &d.h.counit_basis(u)));
        }
    }
    acc.finish()
}

fn embed_dual(d: &DoubleData, phi: &Elem) -> Elem {
    let n = d.n;
    let mut acc = Acc::new();
    for (a, c) in d.h.unit().terms() {
        for (k, x) in phi.terms() {
            acc.add(a * n + k, &(c * x));
        }
    }
    acc.finish()
}

pub fn drinfeld_double(h: &FiniteHopf) -> Result<Double> {
    drinfeld_double_with(h, Straightening::Standard)
}

pub fn drinfeld_double_with(h: &FiniteHopf, rule: Straightening) -> Result<Double> {
    if h.is_lazy() {
        return drinfeld_double_with(&h.materialize(), rule);
    }
    let data = DoubleData::new(h.clone(), rule)?;
    let n = data.n;
    let labels: Vec<String> = (0..n * n).map(|i| format!("{}|{}", data.h.labels()[i / n], data.hd.labels()[i % n])).collect();
    let mut gens: Vec<Elem> = data.h.generators().iter().map(|a| embed_h(&data, a)).collect();
    gens.extend(data.hd.generators().iter().map(|p| embed_dual(&data, p)));
    let big = n * n;
    let mut r = Acc::new();
    for i in 0..n {
        let left = embed_h(&data, &Elem::basis(i));
        let right = embed_dual(&data, &Elem::basis(i));
        for (x, a) in left.terms() {
            for (y, b) in right.terms() {
                r.add(x * big + y, &(a * b));
            }
        }
    }
    let hopf = FiniteHopf::from_double(&format!("D({})", h.name()), labels, data, gens);
    Ok(Double { hopf, r: r.finish() })
}

#[cfg(test)]
mod tests {
    use super::super::axioms::verify_hopf_axioms;
    use super::super::quasi::quasitriangular_check;
    use super::super::zoo::*;
    use super::*;

    #[test]
    fn double_of_z2_group_algebra() {
        let h = build_group_algebra(&GroupTable::cyclic(2));
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.hopf.dim(), 4);
        let rep = verify_hopf_axioms(&d.hopf);
        assert!(rep.passed, "{:?}", rep.failed_axioms);
        assert!(quasitriangular_check(&d.hopf, &d.r).all_passed());
    }

    #[test]
    fn double_of_function_algebra_is_semidirect() {
        // D(O(G)): δ-functions acted on by conjugation, checked for S3
        let g = GroupTable::symmetric3();
        let h = build_function_algebra(&g);
        let d = drinfeld_double(&h).unwrap();
        assert!(verify_hopf_axioms(&d.hopf).passed);
        assert!(quasitriangular_check(&d.hopf, &d.r).all_passed());
        // the group element x ∈ O(G)* is the evaluation functional d[x]*
        for x in 0..6 {
            for y in 0..6 {
                let gx = d.embed_dual(&Elem::basis(x));
                let dy = d.embed_h(&Elem::basis(y));
                let lhs = d.hopf.mul(&d.hopf.mul(&gx, &dy), &d.embed_dual(&Elem::basis(g.inv(x))));
                let conj = g.m(g.m(x, y), g.inv(x));
                assert_eq!(lhs, d.embed_h(&Elem::basis(conj)));
            }
        }
    }

    #[test]
    fn doubles_of_zoo_small() {
        for h in [build_taft(2, &Scalar::int(-1)).unwrap(), build_taft(3, &root_of_unity(3).unwrap()).unwrap(), build_nichols(1).unwrap()] {
            let d = drinfeld_double(&h).unwrap();
            assert_eq!(d.hopf.dim(), h.dim() * h.dim());
            let rep = verify_hopf_axioms(&d.hopf);
            assert!(rep.passed, "{}: {:?}", h.name(), rep.failed_axioms);
            let q = quasitriangular_check(&d.hopf, &d.r);
            assert!(q.all_passed(), "{}: {:?}", h.name(), q.failures());
        }
    }

    #[test]
    fn double_of_borel_ell3() {
        let d = drinfeld_double(&build_uq_borel_plus(3).unwrap()).unwrap();
        assert_eq!(d.hopf.dim(), 81);
        assert!(verify_hopf_axioms(&d.hopf).passed);
        let q = quasitriangular_check(&d.hopf, &d.r);
        assert!(q.all_passed(), "{:?}", q.failures());
    }

    #[test]
    fn antipodal_rule_breaks_the_double() {
        let h = build_taft(3, &root_of_unity(3).unwrap()).unwrap();
        let d = drinfeld_double_with(&h, Straightening::Antipodal).unwrap();
        let axioms = verify_hopf_axioms(&d.hopf);
        let q = quasitriangular_check(&d.hopf, &d.r);
        assert!(!axioms.passed || !q.all_passed());
    }
}
