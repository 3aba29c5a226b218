//! The universal coefficient type.

use super::cyclotomic::{cyclotomic_field, Cyclotomic};
use super::poly::Poly;
use super::rational::Rational;
use super::ratfunc::RatFunc;
use super::var::Var;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact scalar. Always stored in the smallest representation:
/// rational values are `Q` regardless of how they were produced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Cyc(Cyclotomic),
    F(RatFunc),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Q(Rational::ZERO)
    }

    pub fn one() -> Self {
        Scalar::Q(Rational::ONE)
    }

    pub fn int(n: i64) -> Self {
        Scalar::Q(Rational::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Q(Rational::new(n, d))
    }

    pub fn var(name: &str) -> Self {
        Scalar::F(RatFunc::var(Var::new(name)))
    }

    pub fn from_var(v: Var) -> Self {
        Scalar::F(RatFunc::var(v))
    }

    /// ζ_ℓ; fails unless ℓ is odd and at least 3.
    pub fn zeta(ell: u32) -> Result<Self> {
        Ok(Scalar::Cyc(Cyclotomic::zeta_pow(cyclotomic_field(ell)?, 1)))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        match r.constant_value() {
            Some(c) => Scalar::Q(c),
            None => Scalar::F(r),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn from_cyc(c: Cyclotomic) -> Self {
        match c.as_rational() {
            Some(r) => Scalar::Q(r),
            None => Scalar::Cyc(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Q(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Q(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Q(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        match self {
            Scalar::Q(r) => Some(RatFunc::constant(r.clone())),
            Scalar::F(f) => Some(f.clone()),
            Scalar::Cyc(_) => None,
        }
    }

    /// A short description of the field the value lives in.
    pub fn field_name(&self) -> String {
        match self {
            Scalar::Q(_) => "Q".into(),
            Scalar::Cyc(c) => format!("Q(zeta{})", c.ell()),
            Scalar::F(f) => {
                let names: Vec<&str> = f.vars().iter().map(|v| v.name()).collect();
                format!("Q({})", names.join(","))
            }
        }
    }

    /// Variables occurring in the value (empty for cyclotomics).
    pub fn vars(&self) -> Vec<Var> {
        match self {
            Scalar::F(f) => f.vars(),
            _ => Vec::new(),
        }
    }

    fn mixed(a: &Scalar, b: &Scalar) -> Error {
        Error::MixedField(format!("{} and {}", a.field_name(), b.field_name()))
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar> {
        Ok(match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Q(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Q(a)) => {
                Scalar::from_cyc(c.add(&Cyclotomic::from_rational(c.field(), a.clone())))
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.ell() == b.ell() => Scalar::from_cyc(a.add(b)),
            (Scalar::Q(a), Scalar::F(f)) | (Scalar::F(f), Scalar::Q(a)) => {
                Scalar::from_ratfunc(f.add(&RatFunc::constant(a.clone())))
            }
            (Scalar::F(a), Scalar::F(b)) => Scalar::from_ratfunc(a.add(b)),
            _ => return Err(Self::mixed(self, o)),
        })
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar> {
        self.checked_add(&o.neg_ref())
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar> {
        Ok(match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Q(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Q(a)) => Scalar::from_cyc(c.scale(a)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) if a.ell() == b.ell() => Scalar::from_cyc(a.mul(b)),
            (Scalar::Q(a), Scalar::F(f)) | (Scalar::F(f), Scalar::Q(a)) => Scalar::from_ratfunc(f.scale(a)),
            (Scalar::F(a), Scalar::F(b)) => Scalar::from_ratfunc(a.mul(b)),
            _ => return Err(Self::mixed(self, o)),
        })
    }

    pub fn checked_inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Q(a) if a.is_zero() => Err(Error::DivisionByZero),
            Scalar::Q(a) => Ok(Scalar::Q(a.recip())),
            Scalar::Cyc(c) => c.inv().map(Scalar::from_cyc).ok_or(Error::DivisionByZero),
            Scalar::F(f) => f.inv().map(Scalar::from_ratfunc).ok_or(Error::DivisionByZero),
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        if self.is_zero() && !o.is_zero() {
            return Ok(Scalar::zero());
        }
        self.checked_mul(&o.checked_inv()?)
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
            Scalar::F(f) => Scalar::F(f.neg()),
        }
    }

    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Substitutes a variable by a scalar.
    pub fn substitute(&self, v: Var, x: &Scalar) -> Result<Scalar> {
        match self {
            Scalar::F(f) => {
                if !f.vars().contains(&v) {
                    return Ok(self.clone());
                }
                let xr = x.as_ratfunc().ok_or_else(|| Error::Unsupported("substituting a cyclotomic value".into()))?;
                f.substitute(v, &xr)
                    .map(Scalar::from_ratfunc)
                    .ok_or_else(|| Error::Pole(format!("{v} := {x} in {self}")))
            }
            _ => Ok(self.clone()),
        }
    }

    /// Heuristic size, smaller is cheaper to pivot on.
    pub fn size(&self) -> u64 {
        match self {
            Scalar::Q(r) => r.height(),
            Scalar::Cyc(c) => c.size(),
            Scalar::F(f) => f.size(),
        }
    }

    /// Canonical text form; parses back to an equal value.
    pub fn canonical(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<Scalar> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, text: s };
        let v = p.expr()?;
        p.ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("trailing input at {} in '{s}'", p.pos)));
        }
        Ok(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "{c}"),
            Scalar::F(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        Scalar::parse(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Q(r)
    }
}

macro_rules! scalar_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
scalar_op!(Add, add, checked_add);
scalar_op!(Sub, sub, checked_sub);
scalar_op!(Mul, mul, checked_mul);
scalar_op!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at {} in '{}'", self.pos, self.text))
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                self.pos += 1;
                let t = self.term()?;
                acc = if c == b'+' { acc.checked_add(&t)? } else { acc.checked_sub(&t)? };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            if c == b'*' || c == b'/' {
                self.pos += 1;
                let t = self.unary()?;
                acc = if c == b'*' { acc.checked_mul(&t)? } else { acc.checked_div(&t)? };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg_ref())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            if base.is_zero() && e < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let v = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(-self.exponent()?);
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                v
            }
            _ => self.atom()?,
        };
        v.as_rational().and_then(|r| r.to_i64()).ok_or_else(|| self.err("exponent must be an integer"))
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let r: Rational = self.text[start..self.pos].parse().map_err(|e: String| Error::Parse(e))?;
                Ok(Scalar::Q(r))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                if let Some(n) = name.strip_prefix("zeta") {
                    if let Ok(ell) = n.parse::<u32>() {
                        return Scalar::zeta(ell);
                    }
                }
                Ok(Scalar::var(name))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(p("(q^2-1)/(q-1)"), p("q+1"));
        assert!(p("(q-q^-1)/(q-q^(-1))").is_one());
        let z = Scalar::zeta(3).unwrap();
        assert!((&(&z * &z) * &z).is_one());
    }

    #[test]
    fn canonical_roundtrip_and_idempotent() {
        for s in ["3/4", "q^2+1", "(q^2+1)/(q)", "(2*q*z-z^2)/(q^2+3/2)", "zeta5^3-2*zeta5+1", "-u+1/2"] {
            let a = p(s);
            let t = a.canonical();
            let b = p(&t);
            assert_eq!(a, b, "{s} -> {t}");
            assert_eq!(b.canonical(), t);
        }
        assert_eq!(p("q/2/q^3").canonical(), "(1/2)/(q^2)");
    }

    #[test]
    fn mixed_fields_rejected() {
        let z3 = Scalar::zeta(3).unwrap();
        let z5 = Scalar::zeta(5).unwrap();
        assert!(matches!(z3.checked_add(&z5), Err(Error::MixedField(_))));
        assert!(matches!(z3.checked_mul(&Scalar::var("q")), Err(Error::MixedField(_))));
        assert!(matches!(Scalar::var("q").checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn demotion_to_rational() {
        let z = Scalar::zeta(3).unwrap();
        let s = &(&Scalar::one() + &z) + &(&z * &z);
        assert_eq!(s, Scalar::zero());
        assert!(matches!(&Scalar::var("q") - &Scalar::var("q"), Scalar::Q(_)));
    }

    fn small_ratfunc() -> impl Strategy<Value = Scalar> {
        (-3i64..4, -3i64..4, -2i64..3, 0i64..3, 1i64..3).prop_map(|(a, b, c, e, d)| {
            let q = Scalar::var("q");
            let z = Scalar::var("z");
            let num = &(&Scalar::int(a) * &q.pow(e)) + &(&Scalar::int(b) * &z);
            let den = &(&q.pow(d) + &Scalar::int(c)) + &z;
            &num / &den
        })
    }

    fn small_cyc() -> impl Strategy<Value = Scalar> {
        prop::collection::vec(-3i64..4, 4).prop_map(|v| {
            let z = Scalar::zeta(5).unwrap();
            v.iter().enumerate().fold(Scalar::zero(), |acc, (k, &c)| &acc + &(&Scalar::int(c) * &z.pow(k as i64)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn ratfunc_field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
            prop_assert_eq!(Scalar::parse(&a.canonical()).unwrap(), a);
        }

        #[test]
        fn cyclotomic_field_axioms(a in small_cyc(), b in small_cyc(), c in small_cyc()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
            prop_assert_eq!(Scalar::parse(&a.canonical()).unwrap(), a);
        }
    }
}
