//! Truncated Laurent series in x = u^{-1} with scalar or operator coefficients.

use super::scalar::Scalar;
use super::var::Var;
use crate::error::{Error, Result};
use std::fmt::Debug;

/// Coefficient ring for series arithmetic.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_c(&self) -> bool;
    fn add_c(&self, o: &Self) -> Self;
    fn sub_c(&self, o: &Self) -> Self;
    fn mul_c(&self, o: &Self) -> Self;
    fn scale_c(&self, s: &Scalar) -> Self;
    fn inv_c(&self) -> Option<Self>;
}

impl Coeff for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn add_c(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_c(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_c(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_c(&self, s: &Scalar) -> Self {
        self * s
    }
    fn inv_c(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

/// `Σ_k coeffs[k] · x^{val+k}`, exact for powers `x^j` with `j < prec`.
/// With x = u^{-1}, "order N" means `prec = N + 1`.
#[derive(Clone, Debug)]
pub struct Series<C: Coeff> {
    pub var: Var,
    val: i32,
    coeffs: Vec<C>,
    prec: i32,
    /// A zero coefficient used to answer queries outside the stored range.
    zero: C,
}

impl<C: Coeff> Series<C> {
    /// From `(power of u, coefficient)` pairs, exact up to `u^{-order}`.
    pub fn from_u_terms(var: Var, terms: &[(i32, C)], order: i32, zero: C) -> Self {
        let prec = order + 1;
        let val = terms.iter().map(|(p, _)| -p).min().unwrap_or(0).min(0);
        let len = (prec - val).max(0) as usize;
        let mut coeffs = vec![zero.clone(); len];
        for (p, c) in terms {
            let j = -p;
            if j < prec {
                let idx = (j - val) as usize;
                coeffs[idx] = coeffs[idx].add_c(c);
            }
        }
        Series { var, val, coeffs, prec, zero }
    }

    pub fn constant(var: Var, c: C, order: i32) -> Self {
        let zero = c.zero_like();
        Self::from_u_terms(var, &[(0, c)], order, zero)
    }

    pub fn order(&self) -> i32 {
        self.prec - 1
    }

    pub fn zero_coeff(&self) -> &C {
        &self.zero
    }

    /// Coefficient of u^{-j}.
    pub fn coeff(&self, j: i32) -> &C {
        assert!(j < self.prec, "coefficient u^-{j} beyond truncation order {}", self.order());
        if j < self.val {
            return &self.zero;
        }
        &self.coeffs[(j - self.val) as usize]
    }

    /// Smallest j with a nonzero coefficient of u^{-j}, if any below precision.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs.iter().position(|c| !c.is_zero_c()).map(|k| k as i32 + self.val)
    }

    fn build(var: Var, val: i32, prec: i32, zero: C, f: impl Fn(i32) -> C) -> Self {
        let len = (prec - val).max(0) as usize;
        let coeffs = (0..len).map(|k| f(val + k as i32)).collect();
        Series { var, val, coeffs, prec, zero }
    }

    fn at(&self, j: i32) -> C {
        if j < self.val || j >= self.prec {
            self.zero.clone()
        } else {
            self.coeffs[(j - self.val) as usize].clone()
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let val = self.val.min(o.val);
        Self::build(self.var, val, prec, self.zero.clone(), |j| self.at(j).add_c(&o.at(j)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let val = self.val.min(o.val);
        Self::build(self.var, val, prec, self.zero.clone(), |j| self.at(j).sub_c(&o.at(j)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::build(self.var, self.val, self.prec, self.zero.clone(), |j| self.at(j).scale_c(s))
    }

    fn lead(&self) -> i32 {
        self.valuation().unwrap_or(self.prec)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (va, vb) = (self.lead(), o.lead());
        let prec = (self.prec + vb).min(o.prec + va);
        let val = va + vb;
        Self::build(self.var, val.min(prec), prec, self.zero.clone(), |j| {
            let mut acc = self.zero.clone();
            for i in va..=(j - vb) {
                let a = self.at(i);
                if a.is_zero_c() {
                    continue;
                }
                let b = o.at(j - i);
                if !b.is_zero_c() {
                    acc = acc.add_c(&a.mul_c(&b));
                }
            }
            acc
        })
    }

    /// Two-sided inverse; the leading coefficient must be invertible.
    pub fn invert(&self) -> Result<Self> {
        let v = self.valuation().ok_or_else(|| Error::NotInvertible("series is zero to truncation order".into()))?;
        let a0 = self.at(v);
        let a0i = a0.inv_c().ok_or_else(|| Error::NotInvertible(format!("leading coefficient {a0:?}")))?;
        let rel = self.prec - v;
        let mut b: Vec<C> = Vec::with_capacity(rel as usize);
        for n in 0..rel {
            if n == 0 {
                b.push(a0i.clone());
                continue;
            }
            let mut acc = self.zero.clone();
            for k in 1..=n {
                let a = self.at(v + k);
                if !a.is_zero_c() {
                    acc = acc.add_c(&a.mul_c(&b[(n - k) as usize]));
                }
            }
            b.push(self.zero.sub_c(&a0i.mul_c(&acc)));
        }
        let val = -v;
        let prec = val + rel;
        Ok(Series { var: self.var, val, coeffs: b, prec, zero: self.zero.clone() })
    }

    /// Substitutes u := u + c.
    pub fn shift(&self, c: &Scalar) -> Self {
        let mut out = vec![self.zero.clone(); (self.prec - self.val).max(0) as usize];
        let mut bump = |j: i32, v: C| {
            if j < self.prec && j >= self.val {
                let idx = (j - self.val) as usize;
                out[idx] = out[idx].add_c(&v);
            }
        };
        for j in self.val..self.prec {
            let a = self.at(j);
            if a.is_zero_c() {
                continue;
            }
            if j >= 0 {
                // x^j -> x^j (1 + c x)^{-j}
                let mut binom = Scalar::one();
                for i in 0..(self.prec - j) {
                    let coeff = &binom * &c.pow(i as i64);
                    bump(j + i, a.scale_c(&coeff));
                    // next: multiply by -(j+i)/(i+1)
                    binom = &binom * &Scalar::frac(-((j + i) as i64), (i + 1) as i64);
                }
            } else {
                // u^m -> (u + c)^m, m = -j
                let m = -j;
                let mut binom = Scalar::one();
                for i in 0..=m {
                    bump(j + i, a.scale_c(&(&binom * &c.pow(i as i64))));
                    binom = &binom * &Scalar::frac((m - i) as i64, (i + 1) as i64);
                }
            }
        }
        Series { var: self.var, val: self.val, coeffs: out, prec: self.prec, zero: self.zero.clone() }
    }

    pub fn truncate(&self, order: i32) -> Self {
        let prec = (order + 1).min(self.prec);
        Self::build(self.var, self.val.min(prec), prec, self.zero.clone(), |j| self.at(j))
    }

    pub fn map<D: Coeff>(&self, zero: D, f: impl Fn(&C) -> D) -> Series<D> {
        Series { var: self.var, val: self.val, coeffs: self.coeffs.iter().map(f).collect(), prec: self.prec, zero }
    }

    /// Equality of all coefficients known in both series.
    pub fn agrees_with(&self, o: &Self) -> bool {
        let prec = self.prec.min(o.prec);
        (self.val.min(o.val)..prec).all(|j| self.at(j) == o.at(j))
    }

    /// Nonzero `(power of u, coefficient)` pairs.
    pub fn u_terms(&self) -> Vec<(i32, C)> {
        (self.val..self.prec).filter_map(|j| {
            let c = self.at(j);
            (!c.is_zero_c()).then_some((-j, c))
        }).collect()
    }
}

impl Series<Scalar> {
    pub fn scalar(var: Var, terms: &[(i32, Scalar)], order: i32) -> Self {
        Self::from_u_terms(var, terms, order, Scalar::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u() -> Var {
        Var::new("u")
    }

    #[test]
    fn geometric_inverse() {
        let s = Series::scalar(u(), &[(0, Scalar::one()), (-1, Scalar::int(-1))], 3);
        let inv = s.invert().unwrap();
        assert_eq!(inv.u_terms(), vec![(0, Scalar::one()), (-1, Scalar::one()), (-2, Scalar::one()), (-3, Scalar::one())]);
    }

    #[test]
    fn inverse_of_u_plus_one() {
        // u(1 + u^{-1}) = u + 1, known exactly through u^{-4}
        let s = Series::scalar(u(), &[(1, Scalar::one()), (0, Scalar::one())], 4);
        let inv = s.invert().unwrap();
        assert_eq!(inv.order(), 6);
        let expect: Vec<(i32, Scalar)> = (1..=6).map(|k| (-k, Scalar::int(if k % 2 == 1 { 1 } else { -1 }))).collect();
        assert_eq!(inv.u_terms(), expect);
    }

    #[test]
    fn shift_matches_expansion() {
        // 1/u shifted by 1 equals 1/(u+1)
        let x = Series::scalar(u(), &[(-1, Scalar::one())], 5);
        let shifted = x.shift(&Scalar::one());
        let direct = Series::scalar(u(), &[(1, Scalar::one()), (0, Scalar::one())], 3).invert().unwrap();
        assert!(shifted.agrees_with(&direct));
        // u^2 shifted by a gives u^2 + 2a u + a^2
        let a = Scalar::var("a");
        let sq = Series::scalar(u(), &[(2, Scalar::one())], 2).shift(&a);
        assert_eq!(sq.u_terms(), vec![(2, Scalar::one()), (1, &Scalar::int(2) * &a), (0, &a * &a)]);
    }

    proptest! {
        #[test]
        fn inverse_times_self_is_one(c in prop::collection::vec(-4i64..5, 1..6), lead in 1i64..4, n in 2i32..7) {
            let mut terms = vec![(0, Scalar::int(lead))];
            for (k, &x) in c.iter().enumerate() {
                terms.push((-(k as i32) - 1, Scalar::int(x)));
            }
            let s = Series::scalar(u(), &terms, n);
            let prod = s.mul(&s.invert().unwrap());
            let one = Series::scalar(u(), &[(0, Scalar::one())], n);
            prop_assert!(prod.agrees_with(&one));
            prop_assert_eq!(prod.order(), n);
        }
    }
}
