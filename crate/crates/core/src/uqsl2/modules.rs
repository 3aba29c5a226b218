//! Highest-weight modules, the Casimir and type-I decomposition.

use super::pbw;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{Presentation, Representation};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// `[n]_q = (q^n − q^{-n})/(q − q^{-1})` for any integer `n`.
pub fn qnum(n: i64, q: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for j in 0..n.abs() {
        acc = &acc + &q.pow(n.abs() - 1 - 2 * j);
    }
    if n < 0 {
        acc.neg_ref()
    } else {
        acc
    }
}

fn module(q: &Scalar, dim: usize, m: i64, truncated: bool) -> Representation {
    let mut e = Matrix::zeros(dim, dim);
    let mut f = Matrix::zeros(dim, dim);
    let mut k = Matrix::zeros(dim, dim);
    let mut ki = Matrix::zeros(dim, dim);
    for j in 0..dim {
        let w = m - 2 * j as i64;
        k[(j, j)] = q.pow(w);
        ki[(j, j)] = q.pow(-w);
        if j + 1 < dim {
            f[(j + 1, j)] = Scalar::one();
        }
        if j > 0 {
            let jj = j as i64;
            e[(j - 1, j)] = &qnum(jj, q) * &qnum(m - jj + 1, q);
        }
    }
    let mats = BTreeMap::from([("e".to_string(), e), ("f".to_string(), f), ("K".to_string(), k), ("Kinv".to_string(), ki)]);
    let mut r = Representation::new(Presentation::Uqsl2, q.clone(), mats).expect("square generators");
    r.truncated = truncated;
    r
}

/// `L_m` on `v, fv, …, f^m v` at generic `q = s²`.
pub fn irrep(m: usize) -> Representation {
    irrep_at(m, &pbw::q())
}

/// `L_m` written in an arbitrary invertible parameter `q`.
pub fn irrep_at(m: usize, q: &Scalar) -> Representation {
    module(q, m + 1, m as i64, false)
}

/// The Verma module `M_m` truncated to `f^k v`, `k < n`. The truncation is
/// flagged: `f` sends the last vector outside the span.
pub fn verma(m: i64, n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::Domain("Verma cutoff must be >= 1".into()));
    }
    Ok(module(&pbw::q(), n, m, true))
}

/// Default cutoff `2m + 6` for `m ≥ 0`.
pub fn verma_default(m: i64) -> Result<Representation> {
    verma(m, if m >= 0 { (2 * m + 6) as usize } else { 6 })
}

/// Names of the defining relations that fail.
pub fn check_relations(x: &Representation) -> Vec<String> {
    let q = &x.q;
    let (e, f, k, ki) = (x.get("e"), x.get("f"), x.get("K"), x.get("Kinv"));
    let id = Matrix::identity(x.dim);
    let mut failed = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    check("K Kinv = 1", k.mul(ki) == id && ki.mul(k) == id);
    check("K e Kinv = q^2 e", k.mul(e).mul(ki) == e.scale(&q.pow(2)));
    check("K f Kinv = q^-2 f", k.mul(f).mul(ki) == f.scale(&q.pow(-2)));
    let rhs = k.sub(ki).scale(&(q - &q.inv()).inv());
    check("[e,f] = (K - Kinv)/(q - q^-1)", e.commutator(f) == rhs);
    failed
}

/// `C = fe + (qK + q⁻¹K⁻¹ − 2)/(q − q⁻¹)²`.
pub fn casimir_matrix(x: &Representation) -> Matrix {
    let q = &x.q;
    let d = (q - &q.inv()).pow(-2);
    let two = Matrix::identity(x.dim).scale(&Scalar::int(2));
    let tail = x.get("K").scale(q).add(&x.get("Kinv").scale(&q.inv())).sub(&two).scale(&d);
    x.get("f").mul(x.get("e")).add(&tail)
}

pub fn centrality_check(x: &Representation) -> bool {
    let c = casimir_matrix(x);
    x.presentation.generators().iter().all(|g| c.mul(x.get(g)) == x.get(g).mul(&c))
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightDecomposition {
    /// `(n, basis)`: `K` acts by `q^n` on the span of `basis`.
    pub spaces: Vec<(i64, Vec<Vec<Scalar>>)>,
}

/// Eigenspaces of `K` for eigenvalues `q^n`, `|n| < dim`; errors unless
/// they span (type I).
pub fn weight_spaces(x: &Representation) -> Result<WeightDecomposition> {
    let d = x.dim as i64;
    let k = x.get("K");
    let mut spaces = Vec::new();
    let mut total = 0;
    for n in (-(d - 1)..=d - 1).rev() {
        let shifted = k.sub(&Matrix::identity(x.dim).scale(&x.q.pow(n)));
        let null = shifted.nullspace();
        if !null.is_empty() {
            total += null.len();
            spaces.push((n, null));
        }
    }
    if total != x.dim {
        return Err(Error::Domain(format!("not type I: weight spaces cover {total} of {} dimensions", x.dim)));
    }
    Ok(WeightDecomposition { spaces })
}

/// Highest weights of the irreducible summands, ascending.
#[allow(non_snake_case)]
pub fn decompose_type_I(x: &Representation) -> Result<Vec<i64>> {
    let ws = weight_spaces(x)?;
    let e = x.get("e");
    let mut out = Vec::new();
    for (n, basis) in &ws.spaces {
        let b = Matrix::from_columns(basis);
        let hw = e.mul(&b).nullspace().len();
        if hw > 0 && *n < 0 {
            return Err(Error::Domain(format!("highest-weight vector of negative weight {n}: not a finite type-I module")));
        }
        out.extend(std::iter::repeat_n(*n, hw));
    }
    out.sort();
    let covered: i64 = out.iter().map(|m| m + 1).sum();
    if covered != x.dim as i64 {
        return Err(Error::Domain(format!("summands cover {covered} of {} dimensions", x.dim)));
    }
    Ok(out)
}

/// `tr((φ*)⁻¹ φ)` for the unique-up-to-scale intertwiner `φ: X → X*`, with
/// `X** = X` canonically so that `φ*` is the transpose of `φ`.
pub fn double_dual_trace(x: &Representation) -> Result<Scalar> {
    let xd = x.dual();
    let homs = x.intertwiners(&xd)?;
    match homs.len() {
        0 => Err(Error::Domain("no intertwiner X -> X*: not self-dual".into())),
        1 => {
            let phi = &homs[0];
            let t = phi.transpose().inverse().ok_or_else(|| Error::NotInvertible("intertwiner X -> X*".into()))?;
            Ok(t.mul(phi).trace())
        }
        k => Err(Error::Domain(format!("{k}-dimensional space of intertwiners: not irreducible"))),
    }
}

#[cfg(test)]
mod tests {
    use super::super::pbw::{q, PbwElement};
    use super::*;

    fn qq() -> Scalar {
        let q = q();
        &q - &q.inv()
    }

    #[test]
    fn irrep_shapes_and_relations() {
        for m in 0..5 {
            let r = irrep(m);
            assert_eq!(r.dim, m + 1);
            assert!(check_relations(&r).is_empty(), "m = {m}");
        }
        let triv = irrep(0);
        assert_eq!(triv, Representation::trivial(Presentation::Uqsl2, q()));
    }

    #[test]
    fn e_action_matches_pbw_straightening() {
        // e·f^k v: normal-order e f^k, drop terms with e on the right; K acts on f^{k-1}v
        for m in 0..5i64 {
            let r = irrep(m as usize);
            for k in 1..=m as u32 {
                let w = PbwElement::e().mul(&PbwElement::f().pow(k));
                let mut coeff = Scalar::zero();
                for ((a, b, c), x) in w.terms() {
                    if *c == 0 && *b == k - 1 {
                        coeff = &coeff + &(x * &q().pow(a * (m - 2 * (k as i64 - 1))));
                    }
                }
                assert_eq!(r.get("e")[(k as usize - 1, k as usize)], coeff, "m {m} k {k}");
            }
        }
    }

    #[test]
    fn verma_modules() {
        let m = 2i64;
        let v = verma_default(m).unwrap();
        assert!(v.truncated);
        assert_eq!(v.get("K")[(0, 0)], q().pow(m));
        // singular vector f^{m+1} v
        let col = (m + 1) as usize;
        assert!((0..v.dim).all(|i| v.get("e")[(i, col)].is_zero()));
        let v = verma(-1, 8).unwrap();
        for k in 1..8 {
            assert!(!v.get("e")[(k - 1, k)].is_zero());
        }
        assert!(verma(0, 0).is_err());
    }

    #[test]
    fn tensor_examples() {
        let x = irrep(1).tensor(&irrep(1)).unwrap();
        assert_eq!(x.dim, 4);
        let kd: Vec<Scalar> = (0..4).map(|i| x.get("K")[(i, i)].clone()).collect();
        assert_eq!(kd, vec![q().pow(2), Scalar::one(), Scalar::one(), q().pow(-2)]);
        assert!(x.get("K").is_diagonal());
        assert_eq!(irrep(0).tensor(&irrep(2)).unwrap(), irrep(2));
        assert!(check_relations(&irrep(2).tensor(&irrep(1)).unwrap()).is_empty());
    }

    #[test]
    fn casimir_values() {
        for m in 0..4i64 {
            let c = casimir_matrix(&irrep(m as usize));
            let val = &(&(&q().pow(m + 1) + &q().pow(-m - 1)) - &Scalar::int(2)) * &qq().pow(-2);
            assert_eq!(c, Matrix::identity(m as usize + 1).scale(&val));
        }
        assert!(centrality_check(&irrep(1).tensor(&irrep(2)).unwrap()));
    }

    /// Oracle: multiplicity of L_n is dim V_n − dim V_{n+2} from K's diagonal.
    fn character_oracle(x: &Representation) -> Vec<i64> {
        let d = x.dim as i64;
        let k = x.get("K");
        let count = |n: i64| (0..x.dim).filter(|&i| k[(i, i)] == x.q.pow(n)).count() as i64;
        let mut out = Vec::new();
        for n in 0..d {
            let mult = count(n) - count(n + 2);
            out.extend(std::iter::repeat_n(n, mult.max(0) as usize));
        }
        out
    }

    #[test]
    fn clebsch_gordan_small() {
        assert_eq!(decompose_type_I(&irrep(1).tensor(&irrep(1)).unwrap()).unwrap(), vec![0, 2]);
        assert_eq!(decompose_type_I(&irrep(1).tensor(&irrep(2)).unwrap()).unwrap(), vec![1, 3]);
        assert_eq!(decompose_type_I(&irrep(0).tensor(&irrep(3)).unwrap()).unwrap(), vec![3]);
        for (m, n) in [(2, 2), (3, 1), (2, 3)] {
            let x = irrep(m).tensor(&irrep(n)).unwrap();
            assert_eq!(decompose_type_I(&x).unwrap(), character_oracle(&x));
        }
    }

    #[test]
    fn non_type_one_rejected() {
        // K acting by -q: weight -q is not an integer power of q
        let r = irrep(1);
        let twisted = r.map_scalars(|x| Ok(x.clone())).unwrap();
        let mut mats = twisted.mats.clone();
        mats.insert("K".into(), r.get("K").neg());
        mats.insert("Kinv".into(), r.get("Kinv").neg());
        let bad = Representation::new(Presentation::Uqsl2, q(), mats).unwrap();
        assert!(decompose_type_I(&bad).is_err());
        assert!(decompose_type_I(&verma(-1, 4).unwrap()).is_err());
    }

    #[test]
    fn double_dual_traces() {
        let q = q();
        assert_eq!(double_dual_trace(&irrep(1)).unwrap(), (&q + &q.inv()).neg_ref());
        assert_eq!(double_dual_trace(&irrep(0)).unwrap(), Scalar::one());
        // frozen regression value for L_2
        assert_eq!(double_dual_trace(&irrep(2)).unwrap(), &(&q.pow(2) + &Scalar::one()) + &q.pow(-2));
        assert!(double_dual_trace(&irrep(1).tensor(&irrep(1)).unwrap()).is_err());
    }
}
