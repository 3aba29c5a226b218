//! gl2-modules, the evaluation T-operator and the quantum determinant.

use super::rmatrix::yang_r;
use super::u;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, Series};

/// A gl2-module: `e[i][j]` is the action of `E_{i+1, j+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gl2Module {
    pub dim: usize,
    pub e: [[Matrix; 2]; 2],
}

impl Gl2Module {
    pub fn new(e: [[Matrix; 2]; 2]) -> Result<Self> {
        let dim = e[0][0].rows();
        for row in &e {
            for m in row {
                m.check_square("gl2 generator")?;
                if m.rows() != dim {
                    return Err(Error::Dimension("gl2 generators of different sizes".into()));
                }
            }
        }
        let w = Gl2Module { dim, e };
        if !w.relations_hold() {
            return Err(Error::Domain("matrices violate the gl2 commutation relations".into()));
        }
        Ok(w)
    }

    /// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`.
    pub fn relations_hold(&self) -> bool {
        let zero = Matrix::zeros(self.dim, self.dim);
        let d = |a: usize, b: usize, m: &Matrix| if a == b { m.clone() } else { zero.clone() };
        (0..16).all(|n| {
            let (i, j, k, l) = (n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1);
            let lhs = self.e[i][j].commutator(&self.e[k][l]);
            lhs == d(j, k, &self.e[i][l]).sub(&d(l, i, &self.e[k][j]))
        })
    }

    pub fn trivial() -> Self {
        let z = Matrix::zeros(1, 1);
        Gl2Module { dim: 1, e: [[z.clone(), z.clone()], [z.clone(), z]] }
    }

    /// The defining module `ℂ²` with matrix units.
    pub fn defining() -> Self {
        let unit = |i: usize, j: usize| {
            let mut m = Matrix::zeros(2, 2);
            m[(i, j)] = Scalar::one();
            m
        };
        Gl2Module { dim: 2, e: [[unit(0, 0), unit(0, 1)], [unit(1, 0), unit(1, 1)]] }
    }

    /// The sl2-module `L_m` lifted to gl2 by `E₁₁ = h/2 + c`, `E₂₂ = −h/2 + c`.
    pub fn from_sl2(m: usize, c: &Scalar) -> Self {
        let d = m + 1;
        let mut e = Matrix::zeros(d, d);
        let mut f = Matrix::zeros(d, d);
        let mut e11 = Matrix::zeros(d, d);
        let mut e22 = Matrix::zeros(d, d);
        for k in 0..d {
            let half = Scalar::frac(m as i64 - 2 * k as i64, 2);
            e11[(k, k)] = &half + c;
            e22[(k, k)] = &half.neg_ref() + c;
            if k + 1 < d {
                f[(k + 1, k)] = Scalar::one();
            }
            if k > 0 {
                e[(k - 1, k)] = Scalar::int((k * (m - k + 1)) as i64);
            }
        }
        Gl2Module { dim: d, e: [[e11, e], [f, e22]] }
    }
}

/// The Yangian evaluation module `V_m(a)`: the lift with `c = −a − ½`, so
/// that `H(u)` has eigenvalue `(u−a+1)/(u−a)` on the highest vector of `V₁(a)`.
pub fn yangian_eval_module(m: usize, a: &Scalar) -> Gl2Module {
    Gl2Module::from_sl2(m, &(&a.neg_ref() - &Scalar::frac(1, 2)))
}

/// `T(u) = Σ e_ij ⊗ t_ij(u)` with operator-valued series entries.
#[derive(Clone, Debug)]
pub struct TSeries {
    pub dim: usize,
    pub t: [[Series<Matrix>; 2]; 2],
}

impl TSeries {
    pub fn order(&self) -> i32 {
        self.t[0][0].order()
    }

    pub fn get(&self, i: usize, j: usize) -> &Series<Matrix> {
        &self.t[i][j]
    }

    pub fn identity(dim: usize, order: i32) -> Self {
        let id = Series::constant(u(), Matrix::identity(dim), order);
        let z = Series::from_u_terms(u(), &[], order, Matrix::zeros(dim, dim));
        TSeries { dim, t: [[id.clone(), z.clone()], [z, id]] }
    }

    /// `(ΔT)_ij = Σ_k t_ik ⊗ t_kj` on `W ⊗ U`.
    pub fn tensor(&self, o: &TSeries) -> TSeries {
        let order = self.order().min(o.order());
        let dim = self.dim * o.dim;
        let kron = |a: &Series<Matrix>, b: &Series<Matrix>| {
            let mut terms = Vec::new();
            for (pa, ca) in a.u_terms() {
                for (pb, cb) in b.u_terms() {
                    terms.push((pa + pb, ca.kron(&cb)));
                }
            }
            Series::from_u_terms(u(), &terms, order, Matrix::zeros(dim, dim))
        };
        let entry = |i: usize, j: usize| kron(&self.t[i][0], &o.t[0][j]).add(&kron(&self.t[i][1], &o.t[1][j]));
        TSeries { dim, t: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
    }

    /// The exact rational-function matrices `t_ij` at `u = x` when every series
    /// terminates before the truncation order.
    fn exact(&self, x: &Scalar) -> Result<Vec<Vec<Matrix>>> {
        let mut out = vec![Vec::new(), Vec::new()];
        for (i, row) in self.t.iter().enumerate() {
            for s in row {
                if !s.coeff(s.order()).is_zero() {
                    return Err(Error::Unsupported("T(u) does not terminate below the truncation order".into()));
                }
                let mut m = Matrix::zeros(self.dim, self.dim);
                for (p, c) in s.u_terms() {
                    m = m.add(&c.scale(&x.pow(p as i64)));
                }
                out[i].push(m);
            }
        }
        Ok(out)
    }
}

/// `t_ij(u) = δ_ij + E_ij u⁻¹`, exact to order `n`.
// the name follows the T-operator notation
#[allow(non_snake_case)]
pub fn evaluation_T(w: &Gl2Module, n: i32) -> TSeries {
    let entry = |i: usize, j: usize| {
        let mut terms = vec![(-1, w.e[i][j].clone())];
        if i == j {
            terms.push((0, Matrix::identity(w.dim)));
        }
        Series::from_u_terms(u(), &terms, n, Matrix::zeros(w.dim, w.dim))
    };
    TSeries { dim: w.dim, t: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
}

/// `R¹²(u−v)T¹(u)T²(v) = T²(v)T¹(u)R¹²(u−v)` on `ℂ²⊗ℂ²⊗W` over `ℚ(u, v)`.
pub fn frt_check(t: &TSeries) -> Result<bool> {
    let (uu, vv) = (Scalar::var("u"), Scalar::var("v"));
    let (tu, tv) = (t.exact(&uu)?, t.exact(&vv)?);
    let unit = |i: usize, j: usize| {
        let mut m = Matrix::zeros(2, 2);
        m[(i, j)] = Scalar::one();
        m
    };
    let i2 = Matrix::identity(2);
    let d = 4 * t.dim;
    let mut t1 = Matrix::zeros(d, d);
    let mut t2 = Matrix::zeros(d, d);
    for i in 0..2 {
        for j in 0..2 {
            t1 = t1.add(&unit(i, j).kron(&i2).kron(&tu[i][j]));
            t2 = t2.add(&i2.kron(&unit(i, j)).kron(&tv[i][j]));
        }
    }
    let r = yang_r(&(&uu - &vv)).kron(&Matrix::identity(t.dim));
    Ok(r.mul(&t1).mul(&t2) == t2.mul(&t1).mul(&r))
}

/// `t₁₁(u)t₂₂(u+1) − t₁₂(u)t₂₁(u+1)` to order `n`.
pub fn qdet2(t: &TSeries, n: i32) -> Result<Series<Matrix>> {
    if n < 1 {
        return Err(Error::Domain("order must be >= 1".into()));
    }
    let one = Scalar::one();
    let a = t.t[0][0].mul(&t.t[1][1].shift(&one));
    let b = t.t[0][1].mul(&t.t[1][0].shift(&one));
    Ok(a.sub(&b).truncate(n))
}

/// Coefficients of `qdet T` commute with every coefficient of `T` to order `n`.
pub fn qdet_is_central(t: &TSeries, n: i32) -> Result<bool> {
    let q = qdet2(t, n)?;
    for k in 0..=n.min(q.order()) {
        let c = q.coeff(k);
        for row in &t.t {
            for s in row {
                for l in 0..=n.min(s.order()) {
                    let x = s.coeff(l);
                    if c.mul(x) != x.mul(c) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
