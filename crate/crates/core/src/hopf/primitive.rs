//! Grouplike and skew-primitive elements by exact linear algebra.

use super::data::FiniteHopf;
use super::dual::dual_hopf;
use super::echelon::Echelon;
use super::elem::Elem;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Candidate eigenvalues: 0 and `±ζ^j` for the cyclotomic field the structure
/// constants live in (just `0, ±1` over ℚ).
fn candidate_values(h: &FiniteHopf) -> Vec<Scalar> {
    let n = h.dim();
    let mut ell = None;
    'scan: for i in 0..n {
        for j in 0..n {
            for (_, c) in h.mul_basis(i, j).terms() {
                if let Scalar::Cyc(z) = c {
                    ell = Some(z.ell());
                    break 'scan;
                }
            }
        }
    }
    let mut out = vec![Scalar::zero()];
    match ell.and_then(|l| Scalar::zeta(l).ok().map(|z| (l, z))) {
        Some((l, z)) => {
            for j in 0..l as i64 {
                let r = z.pow(j);
                out.push(r.neg_ref());
                out.push(r);
            }
        }
        None => {
            out.push(Scalar::one());
            out.push(Scalar::int(-1));
        }
    }
    out
}

/// All grouplikes `Δx = x⊗x`, `ε(x) = 1`.
///
/// A grouplike is a common eigenvector of the operators `(id⊗φ)Δ` for `φ`
/// running over algebra generators of `H*`, with eigenvalues `φ(x)`. The
/// search branches over the candidate values of each eigenvalue, so
/// grouplikes whose generator values leave that set are not found.
pub fn grouplikes(h: &FiniteHopf) -> Vec<Elem> {
    let n = h.dim();
    let hd = dual_hopf(h);
    let ops: Vec<Matrix> = hd
        .generators()
        .iter()
        .map(|phi| {
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|j| {
                    let mut col = vec![Scalar::zero(); n];
                    for (t, c) in h.comult_basis(j).terms() {
                        let w = phi.coeff(t % n);
                        if !w.is_zero() {
                            col[t / n] = &col[t / n] + &(c * &w);
                        }
                    }
                    col
                })
                .collect();
            Matrix::from_columns(&cols)
        })
        .collect();
    let values = candidate_values(h);
    let mut found = Vec::new();
    search(h, &ops, &values, Matrix::identity(n), 0, &mut found);
    found.sort_by(|a, b| a.terms().iter().map(|t| t.0).cmp(b.terms().iter().map(|t| t.0)));
    found
}

fn search(h: &FiniteHopf, ops: &[Matrix], values: &[Scalar], basis: Matrix, depth: usize, found: &mut Vec<Elem>) {
    if depth == ops.len() {
        if basis.cols() != 1 {
            return;
        }
        let x = Elem::from_dense(&basis.column(0));
        let e = h.counit(&x);
        if e.is_zero() {
            return;
        }
        let x = x.scale(&e.inv());
        if h.comult(&x) == h.tensor(&[&x, &x]) {
            found.push(x);
        }
        return;
    }
    let img = ops[depth].mul(&basis);
    for lam in values {
        let shifted = img.sub(&basis.scale(lam));
        let null = shifted.nullspace();
        if null.is_empty() {
            continue;
        }
        let sub = basis.mul(&Matrix::from_columns(&null));
        search(h, ops, values, sub, depth + 1, found);
    }
}

/// Basis of `{x : Δx = g⊗x + x⊗h}` modulo the trivial ones `span(g − h)`.
pub fn skew_primitives(hopf: &FiniteHopf, g: &Elem, h: &Elem) -> Result<Vec<Elem>> {
    for (name, x) in [("g", g), ("h", h)] {
        if !hopf.is_grouplike(x) {
            return Err(Error::Domain(format!("{name} = {} is not grouplike", hopf.show(x))));
        }
    }
    let n = hopf.dim();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let b = Elem::basis(j);
            hopf.comult(&b).sub(&hopf.tensor(&[g, &b])).sub(&hopf.tensor(&[&b, h])).to_dense(n * n)
        })
        .collect();
    let mut trivial = Echelon::new();
    trivial.insert(&g.sub(h));
    let mut out = Vec::new();
    for v in Matrix::from_columns(&cols).nullspace() {
        let x = Elem::from_dense(&v);
        let r = trivial.reduce(&x);
        if trivial.insert(&x) {
            out.push(r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::zoo::*;
    use super::*;

    #[test]
    fn group_algebra_grouplikes() {
        for n in 1..=5 {
            let h = build_group_algebra(&GroupTable::cyclic(n));
            let g = grouplikes(&h);
            assert_eq!(g.len(), n);
            assert!((0..n).all(|i| g.contains(&Elem::basis(i))));
        }
    }

    #[test]
    fn taft_grouplikes_and_skew_primitives() {
        let t = build_taft(3, &root_of_unity(3).unwrap()).unwrap();
        let g = grouplikes(&t);
        let expect: Vec<Elem> = ["1", "g", "g^2"].iter().map(|l| t.b(l)).collect();
        assert_eq!(g, expect);
        let sp = skew_primitives(&t, &t.b("g"), t.unit()).unwrap();
        assert_eq!(sp.len(), 1);
        // spanned by x: every solution is a multiple of x
        let mut e = Echelon::new();
        e.insert(&t.b("x"));
        assert!(e.contains(&sp[0]));
        assert!(skew_primitives(&t, &t.b("g"), &t.b("g")).unwrap().is_empty());
        assert!(skew_primitives(&t, &t.b("x"), t.unit()).is_err());
    }

    #[test]
    fn function_algebra_grouplikes_are_characters() {
        // O(S3): the trivial and sign characters
        let s3 = build_function_algebra(&GroupTable::symmetric3());
        assert_eq!(grouplikes(&s3).len(), 2);
        let z3 = build_function_algebra(&GroupTable::cyclic(3));
        // over Q only the trivial character survives
        assert_eq!(grouplikes(&z3), vec![z3.unit().clone()]);
    }
}
