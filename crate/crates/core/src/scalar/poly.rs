//! Sparse multivariate polynomials over ℚ with graded-lex term order and a
//! recursive content/primitive-part GCD.

use super::rational::Rational;
use super::var::Var;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector, sorted by variable, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|&(_, e)| e).unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        for &(v, e) in &self.0 {
            let f = other.exp(v);
            if f > 0 {
                out.push((v, e.min(f)));
            }
        }
        Monomial(out)
    }

    pub fn without(&self, v: Var) -> (u32, Monomial) {
        let mut out = SmallVec::new();
        let mut e = 0;
        for &(w, k) in &self.0 {
            if w == v {
                e = k;
            } else {
                out.push((w, k));
            }
        }
        (e, Monomial(out))
    }

    /// Graded-lex comparison; variables earlier in name order weigh more.
    pub fn grlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial as terms sorted by descending graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), Rational::ONE)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms: sorts and merges duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_by(|a, b| b.0.grlex(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = &last.1 + &c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::ZERO)
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or(Rational::ZERO)
    }

    /// Sorted list of variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &Rational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.grlex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_constant() {
            return self.scale(&other.terms[0].1);
        }
        if self.is_constant() {
            return other.scale(&self.terms[0].1);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            // Multiplying by a monomial preserves the term order.
            return Poly { terms: self.terms.iter().map(|(a, x)| (a.mul(m), x * c)).collect() };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                terms.push((a.mul(b), x * y));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(a, x)| (a.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.terms[0].1.clone();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if d.is_constant() {
            return Some(self.scale(&d.terms[0].1.recip()));
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(dm)?, c * &inv));
            }
            return Some(Poly { terms: out });
        }
        let (dm, dc) = &d.terms[0];
        let inv = dc.recip();
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((rm, rc)) = r.terms.first().cloned() {
            let m = rm.div(dm)?;
            let c = &rc * &inv;
            r = r.sub(&d.mul_monomial(&m).scale(&c));
            q.push((m, c));
        }
        Some(Poly::from_terms(q))
    }

    /// Coefficients as a polynomial in `v`, highest power first.
    pub fn coeffs_in(&self, v: Var) -> Vec<(u32, Poly)> {
        let mut buckets: std::collections::BTreeMap<u32, Vec<(Monomial, Rational)>> = Default::default();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            buckets.entry(e).or_default().push((rest, c.clone()));
        }
        buckets.into_iter().rev().map(|(e, t)| (e, Poly::from_terms(t))).collect()
    }

    fn lc_in(&self, v: Var) -> (u32, Poly) {
        let d = self.degree_in(v);
        let t = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == d)
            .map(|(m, c)| (m.without(v).1, c.clone()))
            .collect();
        (d, Poly::from_terms(t))
    }

    /// Pseudo-remainder of `self` by `b` with respect to `v`.
    fn prem(&self, b: &Poly, v: Var) -> Poly {
        let (db, lb) = b.lc_in(v);
        let mut r = self.clone();
        loop {
            if r.is_zero() {
                return r;
            }
            let (dr, lr) = r.lc_in(v);
            if dr < db {
                return r;
            }
            let shift = Monomial::var(v, dr - db);
            r = r.mul(&lb).sub(&b.mul(&lr).mul_monomial(&shift));
        }
    }

    /// Gcd of the coefficients in `v`.
    fn content_in(&self, v: Var) -> Poly {
        let mut g = Poly::zero();
        for (_, c) in self.coeffs_in(v) {
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Scales to coprime integer coefficients with positive leading term.
    fn primitive_z(&self) -> Poly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return Poly::zero();
        }
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(&c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut s = Rational::from_big(num_rational::BigRational::new(l, g));
        if self.terms[0].1.is_negative() {
            s = -&s;
        }
        if s.is_one() {
            self.clone()
        } else {
            self.scale(&s)
        }
    }

    fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let mut g = match it.next() {
            Some((m, _)) => m.clone(),
            None => return Monomial::one(),
        };
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn eval_rational(&self, v: Var, x: &Rational) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            terms.push((rest, c * &x.pow(e as i32)));
        }
        Poly::from_terms(terms)
    }

    /// Heuristic size for pivot selection.
    pub fn size(&self) -> u64 {
        self.terms.iter().map(|(m, c)| 1 + m.degree() as u64 + c.height()).sum()
    }
}

/// Monic gcd over ℚ; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    if a.is_monomial() || b.is_monomial() {
        let g = a.monomial_content().gcd(&b.monomial_content());
        return Poly::monomial(g, Rational::ONE);
    }
    // Pull out common monomial factors first; cheap and frequent here.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    if !ma.is_one() || !mb.is_one() {
        let g = ma.gcd(&mb);
        let a2 = a.div_exact(&Poly::monomial(ma, Rational::ONE)).expect("monomial content divides");
        let b2 = b.div_exact(&Poly::monomial(mb, Rational::ONE)).expect("monomial content divides");
        return gcd(&a2, &b2).mul_monomial(&g);
    }
    let va = a.vars();
    let vb = b.vars();
    let v = *va.iter().chain(vb.iter()).min().expect("non-constant polys have variables");
    if !a.has_var(v) {
        return gcd(a, &b.content_in(v));
    }
    if !b.has_var(v) {
        return gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides").primitive_z();
    let mut r = b.div_exact(&cb).expect("content divides").primitive_z();
    if p.degree_in(v) < r.degree_in(v) {
        std::mem::swap(&mut p, &mut r);
    }
    loop {
        let rem = p.prem(&r, v).primitive_z();
        if rem.is_zero() {
            break;
        }
        if rem.degree_in(v) == 0 {
            return c.monic();
        }
        p = r;
        let cr = rem.content_in(v);
        r = rem.div_exact(&cr).expect("content divides").primitive_z();
    }
    let g = r.div_exact(&r.content_in(v)).expect("content divides");
    c.mul(&g).monic()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::new("q"))
    }
    fn z() -> Poly {
        Poly::var(Var::new("z"))
    }
    fn c(n: i64) -> Poly {
        Poly::constant(Rational::from_int(n))
    }

    #[test]
    fn grlex_order_and_display() {
        let p = z().add(&q().pow(2)).add(&c(1)).add(&q().mul(&z()).scale(&Rational::new(3, 2)));
        assert_eq!(p.to_string(), "q^2+3/2*q*z+z+1");
    }

    #[test]
    fn exact_division() {
        let a = q().pow(2).sub(&c(1));
        let b = q().sub(&c(1));
        assert_eq!(a.div_exact(&b).unwrap(), q().add(&c(1)));
        assert!(a.div_exact(&q()).is_none());
    }

    #[test]
    fn gcd_multivariate() {
        let f1 = q().sub(&z());
        let f2 = q().add(&z().mul(&q())).add(&c(2));
        let f3 = z().pow(2).add(&c(1));
        let a = f1.mul(&f2).mul(&f3);
        let b = f1.mul(&f3).mul(&q().add(&c(5)));
        assert_eq!(gcd(&a, &b), f1.mul(&f3).monic());
        assert_eq!(gcd(&f2, &f3), Poly::one());
    }

    #[test]
    fn gcd_with_monomial_factor() {
        let a = q().pow(3).mul(&z()).add(&q().pow(2));
        let b = q().pow(2).mul(&z().add(&c(1)));
        assert_eq!(gcd(&a, &b), q().pow(2));
    }
}
