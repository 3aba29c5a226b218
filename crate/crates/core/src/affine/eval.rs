//! Evaluation modules and the defining relations.

use super::q;
use super::strings::EvalPoint;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{Presentation, Representation};
use crate::scalar::Scalar;
use crate::uqsl2::irrep_at;
use std::collections::BTreeMap;

/// `V_m(z)`: `e₁, f₁, K₁` as on `L_m`, `e₀ = z·f`, `f₀ = z⁻¹·e`, `K₀ = K⁻¹`.
pub fn eval_rep(m: usize, z: &Scalar) -> Result<Representation> {
    if z.is_zero() {
        return Err(Error::Domain("evaluation point must be invertible".into()));
    }
    let l = irrep_at(m, &q());
    let mats = BTreeMap::from([
        ("e1".to_string(), l.get("e").clone()),
        ("f1".to_string(), l.get("f").clone()),
        ("K1".to_string(), l.get("K").clone()),
        ("K1inv".to_string(), l.get("Kinv").clone()),
        ("e0".to_string(), l.get("f").scale(z)),
        ("f0".to_string(), l.get("e").scale(&z.inv())),
        ("K0".to_string(), l.get("Kinv").clone()),
        ("K0inv".to_string(), l.get("K").clone()),
    ]);
    let r = Representation::new(Presentation::AffineSl2, q(), mats)?;
    let report = verify_affine_relations(&r);
    if !report.passed() {
        return Err(Error::Axiom(format!("evaluation module violates {:?}", report.failures)));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineReport {
    pub failures: Vec<String>,
}

impl AffineReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `x³y − [3]x²yx + [3]xyx² − yx³`.
fn serre(x: &Matrix, y: &Matrix, c: &Scalar) -> Matrix {
    let x2 = x.mul(x);
    let x3 = x2.mul(x);
    x3.mul(y).sub(&x2.mul(y).mul(x).scale(c)).add(&x.mul(y).mul(&x2).scale(c)).sub(&y.mul(&x3))
}

/// Checks the five relation groups; failures are named by relation.
pub fn verify_affine_relations(x: &Representation) -> AffineReport {
    let mut failures = Vec::new();
    if x.presentation != Presentation::AffineSl2 {
        failures.push("presentation is not affine_sl2".into());
        return AffineReport { failures };
    }
    let q = &x.q;
    let id = Matrix::identity(x.dim);
    let g = |n: &str| x.get(n);
    let mut check = |name: String, ok: bool| {
        if !ok {
            failures.push(name);
        }
    };
    let qdiff = (q - &q.inv()).inv();
    for i in ["0", "1"] {
        let (e, f, k, ki) = (g(&format!("e{i}")), g(&format!("f{i}")), g(&format!("K{i}")), g(&format!("K{i}inv")));
        check(format!("K{i} K{i}inv = 1"), k.mul(ki) == id && ki.mul(k) == id);
        check(format!("K{i} e{i} = q^2 e{i} K{i}"), k.mul(e) == e.mul(k).scale(&q.pow(2)));
        check(format!("K{i} f{i} = q^-2 f{i} K{i}"), k.mul(f) == f.mul(k).scale(&q.pow(-2)));
        check(format!("[e{i},f{i}] = (K{i} - K{i}inv)/(q - q^-1)"), e.commutator(f) == k.sub(ki).scale(&qdiff));
    }
    check("K0 K1 = K1 K0".into(), g("K0").mul(g("K1")) == g("K1").mul(g("K0")));
    check("[e0,f1] = 0".into(), g("e0").commutator(g("f1")).is_zero());
    check("[e1,f0] = 0".into(), g("e1").commutator(g("f0")).is_zero());
    for (i, j) in [("0", "1"), ("1", "0")] {
        let (k, ki) = (g(&format!("K{i}")), g(&format!("K{i}inv")));
        check(format!("K{i} e{j} K{i}^-1 = q^-2 e{j}"), k.mul(g(&format!("e{j}"))).mul(ki) == g(&format!("e{j}")).scale(&q.pow(-2)));
        check(format!("K{i} f{j} K{i}^-1 = q^2 f{j}"), k.mul(g(&format!("f{j}"))).mul(ki) == g(&format!("f{j}")).scale(&q.pow(2)));
    }
    let c = &(&q.pow(2) + &Scalar::one()) + &q.pow(-2);
    for (i, j) in [("0", "1"), ("1", "0")] {
        check(format!("Serre e{i} e{j}"), serre(g(&format!("e{i}")), g(&format!("e{j}")), &c).is_zero());
        check(format!("Serre f{i} f{j}"), serre(g(&format!("f{i}")), g(&format!("f{j}")), &c).is_zero());
    }
    AffineReport { failures }
}

/// The left dual `π(S(a))ᵀ`.
pub fn rep_dual(x: &Representation) -> Representation {
    x.dual()
}

/// `q^k` with `target = base·q^k`, searched over `|k| ≤ bound`.
fn q_ratio(target: &Scalar, base: &Scalar, bound: i64) -> Option<i64> {
    let r = target / base;
    (-bound..=bound).find(|&k| r == q().pow(k))
}

/// The evaluation point `w` with `V_m(z)* ≅ V_m(w)`. `w` is read off from
/// `tr(e₀e₁)`, which is `w·tr(fe)` on `V_m(w)`, then confirmed by an
/// explicit isomorphism.
pub fn eval_dual_shift(m: usize, z: &EvalPoint) -> Result<EvalPoint> {
    if m == 0 {
        return Err(Error::Domain("the trivial module has no evaluation point".into()));
    }
    let zs = z.to_scalar();
    let v = eval_rep(m, &zs)?;
    let d = rep_dual(&v);
    let l = irrep_at(m, &q());
    let w = &d.get("e0").mul(d.get("e1")).trace() / &l.get("f").mul(l.get("e")).trace();
    let k = q_ratio(&w, &zs, 4 * m as i64 + 4).ok_or_else(|| Error::Domain(format!("dual point {w} is not z·q^k")))?;
    let shifted = z.shift(k);
    let homs = d.intertwiners(&eval_rep(m, &shifted.to_scalar())?)?;
    if homs.len() != 1 || homs[0].inverse().is_none() {
        return Err(Error::Axiom(format!("no isomorphism V({z})* -> V({shifted})")));
    }
    Ok(shifted)
}

fn invariance_ops(x: &Representation) -> Vec<Matrix> {
    let id = Matrix::identity(x.dim);
    x.presentation
        .generators()
        .iter()
        .map(|g| if g.starts_with('K') { x.get(g).sub(&id) } else { x.get(g).clone() })
        .collect()
}

/// Vectors `v` with `a·v = ε(a)v` for every generator.
pub fn invariant_vectors(x: &Representation) -> Vec<Vec<Scalar>> {
    x.joint_kernel(&invariance_ops(x))
}

/// Covectors `ξ` with `ξ∘π(a) = ε(a)ξ`, as coordinate vectors.
pub fn invariant_covectors(x: &Representation) -> Vec<Vec<Scalar>> {
    let ops: Vec<Matrix> = invariance_ops(x).iter().map(Matrix::transpose).collect();
    x.joint_kernel(&ops)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Scalar {
        Scalar::var("z")
    }

    #[test]
    fn fundamental_matrices() {
        let v = eval_rep(1, &z()).unwrap();
        let p = |rows: &[&[&str]]| Matrix::parse(rows).unwrap();
        assert_eq!(v.get("e1"), &p(&[&["0", "1"], &["0", "0"]]));
        assert_eq!(v.get("f1"), &p(&[&["0", "0"], &["1", "0"]]));
        assert_eq!(v.get("K1"), &p(&[&["q", "0"], &["0", "q^-1"]]));
        assert_eq!(v.get("e0"), &p(&[&["0", "0"], &["z", "0"]]));
        assert_eq!(v.get("f0"), &p(&[&["0", "z^-1"], &["0", "0"]]));
        assert_eq!(v.get("K0"), &p(&[&["q^-1", "0"], &["0", "q"]]));
        for m in 0..3 {
            let r = eval_rep(m, &z()).unwrap();
            assert!(r.get("K0").mul(r.get("K1")).is_identity());
        }
        assert_eq!(eval_rep(0, &z()).unwrap(), Representation::trivial(Presentation::AffineSl2, q()));
        assert!(eval_rep(1, &Scalar::zero()).is_err());
    }

    #[test]
    fn tensor_products_satisfy_relations() {
        let w = Scalar::var("w");
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            let x = eval_rep(m, &z()).unwrap().tensor(&eval_rep(n, &w).unwrap()).unwrap();
            assert!(verify_affine_relations(&x).passed(), "{m} {n}");
        }
    }

    #[test]
    fn corrupted_k0() {
        let mut v = eval_rep(1, &z()).unwrap();
        let c = Scalar::int(3);
        let k0 = v.get("K0").scale(&c);
        let k0i = v.get("K0inv").scale(&c.inv());
        v.mats.insert("K0".into(), k0);
        v.mats.insert("K0inv".into(), k0i);
        let rep = verify_affine_relations(&v);
        assert!(rep.failures.iter().any(|f| f.starts_with("[e0,f0]")));
        assert!(!rep.failures.iter().any(|f| f.starts_with("Serre")));
    }

    #[test]
    fn dual_shifts() {
        let z = EvalPoint::symbol("z");
        assert_eq!(eval_dual_shift(1, &z).unwrap(), z.shift(2));
        assert_eq!(eval_dual_shift(2, &z).unwrap(), z.shift(2));
        // the trace in V(z): tr(e1 K1^-1 e0 K0^-1) = q^2 z
        let v = eval_rep(1, &Scalar::var("z")).unwrap();
        let t = v.get("e1").mul(v.get("K1inv")).mul(v.get("e0")).mul(v.get("K0inv")).trace();
        assert_eq!(t, &q().pow(2) * &Scalar::var("z"));
        // double dual ≅ V(q^4 z)
        let dd = rep_dual(&rep_dual(&v));
        let homs = dd.intertwiners(&eval_rep(1, &z.shift(4).to_scalar()).unwrap()).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].inverse().is_some());
        let t = Representation::trivial(Presentation::AffineSl2, q());
        assert_eq!(rep_dual(&t), t);
    }

    #[test]
    fn invariants_detect_the_exact_sequences() {
        let zp = EvalPoint::symbol("z");
        let v = |p: &EvalPoint| eval_rep(1, &p.to_scalar()).unwrap();
        let up = v(&zp).tensor(&v(&zp.shift(2))).unwrap();
        assert_eq!((invariant_vectors(&up).len(), invariant_covectors(&up).len()), (1, 0));
        let down = v(&zp).tensor(&v(&zp.shift(-2))).unwrap();
        assert_eq!((invariant_vectors(&down).len(), invariant_covectors(&down).len()), (0, 1));
        let generic = v(&zp).tensor(&v(&EvalPoint::symbol("w"))).unwrap();
        assert_eq!((invariant_vectors(&generic).len(), invariant_covectors(&generic).len()), (0, 0));
        // the quotient by the invariant line carries K1-weights q^2, 1, q^-2
        let inv = &invariant_vectors(&up)[0];
        let k1 = up.get("K1");
        assert_eq!(k1.apply(inv), inv.clone());
        let diag: Vec<Scalar> = (0..4).map(|i| k1[(i, i)].clone()).collect();
        assert!(k1.is_diagonal());
        let mut rest = diag.clone();
        let pos = rest.iter().position(|x| x.is_one()).unwrap();
        rest.remove(pos);
        assert_eq!(rest, vec![q().pow(2), Scalar::one(), q().pow(-2)]);
    }
}
