//! Hopf pairings `H × K → k` given by a full matrix on bases.

use super::data::FiniteHopf;
use super::dual::dual_hopf;
use super::elem::Elem;
use super::zoo::{build_uq_borel_minus, build_uq_borel_plus, uq_root};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct HopfPairing {
    pub h: FiniteHopf,
    pub k: FiniteHopf,
    /// `matrix[(i, j)] = (h_i, k_j)`.
    pub matrix: Matrix,
}

impl HopfPairing {
    pub fn new(h: FiniteHopf, k: FiniteHopf, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != h.dim() || matrix.cols() != k.dim() {
            return Err(Error::Dimension(format!("pairing matrix {}x{} for dims {} and {}", matrix.rows(), matrix.cols(), h.dim(), k.dim())));
        }
        Ok(HopfPairing { h, k, matrix })
    }

    pub fn pair(&self, x: &Elem, y: &Elem) -> Scalar {
        let mut s = Scalar::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                s = &s + &(&(a * b) * &self.matrix[(*i, *j)]);
            }
        }
        s
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_square() && !self.matrix.det().is_zero()
    }
}

/// `(Δx, z⊗y) = (x, yz)` and `(y⊗z, Δx) = (yz, x)` on bases, where tensor
/// squares pair outer-to-outer, `(a⊗b, c⊗d) = (a, d)(b, c)`; plus the unit
/// and counit conditions. So `y ↦ (·, y)` is a Hopf map `K → H^{*cop}`.
pub fn check_hopf_pairing(p: &HopfPairing) -> bool {
    let (h, k, m) = (&p.h, &p.k, &p.matrix);
    let (n, r) = (h.dim(), k.dim());
    for x in 0..n {
        // table[y][z] = Σ (x₁, y)(x₂, z)
        let mut table = vec![vec![Scalar::zero(); r]; r];
        for (t, c) in h.comult_basis(x).terms() {
            let (a, b) = (t / n, t % n);
            for y in 0..r {
                let left = c * &m[(a, y)];
                if left.is_zero() {
                    continue;
                }
                for z in 0..r {
                    table[y][z] = &table[y][z] + &(&left * &m[(b, z)]);
                }
            }
        }
        for y in 0..r {
            for z in 0..r {
                if p.pair(&Elem::basis(x), k.mul_basis(y, z)) != table[y][z] {
                    return false;
                }
            }
        }
    }
    for x in 0..r {
        let mut table = vec![vec![Scalar::zero(); n]; n];
        // table[y][z] = Σ (y, x₂)(z, x₁)
        for (t, c) in k.comult_basis(x).terms() {
            let (b, a) = (t / r, t % r);
            for y in 0..n {
                let left = c * &m[(y, a)];
                if left.is_zero() {
                    continue;
                }
                for z in 0..n {
                    table[y][z] = &table[y][z] + &(&left * &m[(z, b)]);
                }
            }
        }
        for y in 0..n {
            for z in 0..n {
                if p.pair(h.mul_basis(y, z), &Elem::basis(x)) != table[y][z] {
                    return false;
                }
            }
        }
    }
    (0..r).all(|y| p.pair(h.unit(), &Elem::basis(y)) == k.counit_basis(y)) && (0..n).all(|x| p.pair(&Elem::basis(x), k.unit()) == h.counit_basis(x))
}

/// Pairing of `u_q(b+)` (basis `K₊^i e^j`) with `u_q(b-)` (basis `K₋^k f^l`)
/// fixed by `(K₊, K₋) = q²`, `(e, f) = 1/(q − q⁻¹)`, `(K₊, f) = (e, K₋) = 0`.
pub fn canonical_taft_pairing(ell: usize) -> Result<HopfPairing> {
    let q = uq_root(ell)?;
    let bp = build_uq_borel_plus(ell)?;
    let bm = build_uq_borel_minus(ell)?;
    let hd = dual_hopf(&bp);
    let n = ell * ell;
    // functionals (·, K₋) and (·, f) on u_q(b+)
    let iota_k = Elem::from_pairs((0..ell).map(|i| (i * ell, q.pow(2 * i as i64))));
    let qq = (&q - &q.inv()).inv();
    let iota_f = Elem::from_pairs((0..ell).map(|i| (i * ell + 1, qq.clone())));
    let mut cols = vec![Vec::new(); n];
    // (·, K₋^k f^l) = ι(K₋)^k ι(f)^l
    let mut kk = hd.unit().clone();
    for k in 0..ell {
        let mut v = kk.clone();
        for l in 0..ell {
            cols[k * ell + l] = v.to_dense(n);
            v = hd.mul(&v, &iota_f);
        }
        kk = hd.mul(&kk, &iota_k);
    }
    let p = HopfPairing::new(bp, bm, Matrix::from_columns(&cols))?;
    if !p.is_nondegenerate() {
        return Err(Error::NotInvertible("canonical pairing is degenerate".into()));
    }
    Ok(p)
}
