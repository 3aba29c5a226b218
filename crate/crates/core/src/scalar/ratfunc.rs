//! Reduced fractions of multivariate polynomials over ℚ.

use super::poly::{gcd, Monomial, Poly};
use super::rational::Rational;
use super::var::Var;
use std::fmt;

/// `num/den` with `gcd(num, den) = 1` and `den` monic in graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: Var, e: i32) -> Self {
        let m = Poly::monomial(Monomial::var(v, e.unsigned_abs()), Rational::ONE);
        if e >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc { num: Poly::one(), den: m }
        }
    }

    /// Reduces `num/den`. Panics on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::normalized(n, d)
    }

    fn normalized(n: Poly, d: Poly) -> Self {
        let lc = d.leading_coeff();
        if lc.is_one() {
            RatFunc { num: n, den: d }
        } else {
            let inv = lc.recip();
            RatFunc { num: n.scale(&inv), den: d.scale(&inv) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if self.den.is_one() {
                return RatFunc { num: n, den: Poly::one() };
            }
            return Self::new(n, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&o.den).add(&o.num), den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: o.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return Self::new(n, self.den.mul(&o.den));
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&d2).add(&o.num.mul(&d1));
        Self::new(n, d1.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Some(RatFunc { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
    }

    /// Substitutes `v := x`. Returns `None` if the denominator vanishes.
    pub fn substitute(&self, v: Var, x: &RatFunc) -> Option<RatFunc> {
        let n = subst_poly(&self.num, v, x);
        let d = subst_poly(&self.den, v, x);
        n.div(&d)
    }

    pub fn size(&self) -> u64 {
        self.num.size() + self.den.size()
    }
}

fn subst_poly(p: &Poly, v: Var, x: &RatFunc) -> RatFunc {
    if !p.has_var(v) {
        return RatFunc::from_poly(p.clone());
    }
    // Horner in v over the coefficient polynomials.
    let coeffs = p.coeffs_in(v);
    let mut acc = RatFunc::zero();
    let mut prev = coeffs[0].0;
    for (e, c) in coeffs {
        if e != prev {
            acc = acc.mul(&x.pow((prev - e) as i32).expect("non-negative power"));
            prev = e;
        }
        acc = acc.add(&RatFunc::from_poly(c));
    }
    acc.mul(&x.pow(prev as i32).expect("non-negative power"))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var(Var::new("q"))
    }
    fn c(n: i64) -> RatFunc {
        RatFunc::constant(Rational::from_int(n))
    }

    #[test]
    fn reduces_q_squared_minus_one() {
        let a = q().pow(2).unwrap().sub(&c(1));
        let b = q().sub(&c(1));
        assert_eq!(a.div(&b).unwrap(), q().add(&c(1)));
    }

    #[test]
    fn q_minus_q_inverse_over_itself() {
        let qi = q().inv().unwrap();
        let d = q().sub(&qi);
        assert!(d.div(&d).unwrap().is_one());
        assert_eq!(d.to_string(), "(q^2-1)/(q)");
    }

    #[test]
    fn denominator_normalized_monic() {
        let r = RatFunc::new(Poly::one(), Poly::var(Var::new("q")).scale(&Rational::from_int(2)));
        assert_eq!(r.to_string(), "(1/2)/(q)");
    }

    #[test]
    fn substitution() {
        let z = Var::new("z");
        let r = RatFunc::var(z).sub(&c(1)).div(&RatFunc::var(z).sub(&q().pow(2).unwrap())).unwrap();
        assert!(r.substitute(z, &c(1)).unwrap().is_zero());
        assert!(r.substitute(z, &q().pow(2).unwrap()).is_none());
    }
}
