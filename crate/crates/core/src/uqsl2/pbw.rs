//! U_q(sl2) at generic `q = s²` in the PBW basis `K^a f^b e^c`.

use crate::scalar::{q_int_at, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// The square root `s` of the deformation parameter.
pub fn s() -> Scalar {
    Scalar::var("s")
}

/// `q = s²`.
pub fn q() -> Scalar {
    s().pow(2)
}

pub type Mono = (i64, u32, u32);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<Mono, Scalar>,
}

fn bump<K: Ord + Clone>(map: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let v = map.entry(k.clone()).or_insert_with(Scalar::zero);
    *v = &*v + c;
    if v.is_zero() {
        map.remove(&k);
    }
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(0, 0, 0)
    }

    pub fn mono(a: i64, b: u32, c: u32) -> Self {
        Self::term((a, b, c), Scalar::one())
    }

    pub fn term(m: Mono, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        bump(&mut terms, m, &c);
        PbwElement { terms }
    }

    pub fn e() -> Self {
        Self::mono(0, 0, 1)
    }

    pub fn f() -> Self {
        Self::mono(0, 1, 0)
    }

    pub fn k(a: i64) -> Self {
        Self::mono(a, 0, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Mono) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (m, c) in &o.terms {
            bump(&mut t, *m, c);
        }
        PbwElement { terms: t }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        PbwElement { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (x, a) in &self.terms {
            for (y, b) in &o.terms {
                let ab = a * b;
                for (m, c) in mono_mul(*x, *y).terms {
                    bump(&mut out, m, &(&ab * &c));
                }
            }
        }
        PbwElement { terms: out }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn counit(&self) -> Scalar {
        self.terms.iter().filter(|((_, b, c), _)| *b == 0 && *c == 0).fold(Scalar::zero(), |acc, (_, c)| &acc + c)
    }

    /// `S(K^a f^b e^c) = S(e)^c S(f)^b K^{-a}` with `S(e) = −eK⁻¹`, `S(f) = −Kf`.
    pub fn antipode(&self) -> Self {
        let se = PbwElement::e().mul(&PbwElement::k(-1)).scale(&Scalar::int(-1));
        let sf = PbwElement::k(1).mul(&PbwElement::f()).scale(&Scalar::int(-1));
        let mut out = Self::zero();
        for ((a, b, c), x) in &self.terms {
            out = out.add(&se.pow(*c).mul(&sf.pow(*b)).mul(&PbwElement::k(-a)).scale(x));
        }
        out
    }

    pub fn coproduct(&self) -> PbwTensor {
        let mut out = PbwTensor::zero();
        for ((a, b, c), x) in &self.terms {
            let d = delta_k(*a).mul(&delta_f().pow(*b)).mul(&delta_e().pow(*c));
            out = out.add(&d.scale(x));
        }
        out
    }
}

/// `e·f^b = f^b e + [b]/(q − q⁻¹) (q^{b−1}K − q^{1−b}K⁻¹) f^{b−1}`.
fn e_times(x: &PbwElement) -> PbwElement {
    let q = q();
    let den = (&q - &q.inv()).inv();
    let mut out = BTreeMap::new();
    for ((a, b, c), coef) in &x.terms {
        // e K^a = q^{-2a} K^a e
        let lead = coef * &q.pow(-2 * a);
        bump(&mut out, (*a, *b, c + 1), &lead);
        if *b > 0 {
            let bi = *b as i64;
            let base = &(&lead * &q_int_at(bi, &q).expect("b >= 0")) * &den;
            bump(&mut out, (a + 1, b - 1, *c), &(&base * &q.pow(bi - 1)));
            bump(&mut out, (a - 1, b - 1, *c), &(&base * &q.pow(1 - bi)).neg_ref());
        }
    }
    PbwElement { terms: out }
}

fn mono_mul((a, b, c): Mono, (a2, b2, c2): Mono) -> PbwElement {
    let q = q();
    // K^a f^b e^c K^{a2} = q^{2 a2 (b − c)} K^{a + a2} f^b e^c
    let pre = q.pow(2 * a2 * (b as i64 - c as i64));
    let mut mid = PbwElement::mono(0, b2, 0);
    for _ in 0..c {
        mid = e_times(&mid);
    }
    let mut out = BTreeMap::new();
    for ((x, y, z), coef) in &mid.terms {
        // f^b K^x = q^{2bx} K^x f^b
        let c2x = &(&pre * coef) * &q.pow(2 * b as i64 * x);
        bump(&mut out, (a + a2 + x, b + y, z + c2), &c2x);
    }
    PbwElement { terms: out }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b, c), x)| format!("({x})*K^{a}f^{b}e^{c}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elements of `U ⊗ U` on pairs of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct PbwTensor {
    terms: BTreeMap<(Mono, Mono), Scalar>,
}

impl PbwTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(x: &PbwElement, y: &PbwElement) -> Self {
        let mut t = BTreeMap::new();
        for (m, a) in &x.terms {
            for (n, b) in &y.terms {
                bump(&mut t, (*m, *n), &(a * b));
            }
        }
        PbwTensor { terms: t }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Mono), &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (m, c) in &o.terms {
            bump(&mut t, *m, c);
        }
        PbwTensor { terms: t }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        PbwTensor { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t = BTreeMap::new();
        for ((x1, x2), a) in &self.terms {
            for ((y1, y2), b) in &o.terms {
                let l = mono_mul(*x1, *y1);
                let r = mono_mul(*x2, *y2);
                let ab = a * b;
                for (m, c) in &l.terms {
                    for (n, d) in &r.terms {
                        bump(&mut t, (*m, *n), &(&(&ab * c) * d));
                    }
                }
            }
        }
        PbwTensor { terms: t }
    }

    pub fn pow(&self, n: u32) -> Self {
        let one = PbwTensor::pure(&PbwElement::one(), &PbwElement::one());
        (0..n).fold(one, |acc, _| acc.mul(self))
    }

    /// `μ ∘ (f ⊗ g)`.
    pub fn contract(&self, f: impl Fn(&PbwElement) -> PbwElement, g: impl Fn(&PbwElement) -> PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for ((m, n), c) in &self.terms {
            let l = f(&PbwElement::term(*m, Scalar::one()));
            let r = g(&PbwElement::term(*n, Scalar::one()));
            out = out.add(&l.mul(&r).scale(c));
        }
        out
    }
}

fn delta_e() -> PbwTensor {
    PbwTensor::pure(&PbwElement::e(), &PbwElement::k(1)).add(&PbwTensor::pure(&PbwElement::one(), &PbwElement::e()))
}

fn delta_f() -> PbwTensor {
    PbwTensor::pure(&PbwElement::f(), &PbwElement::one()).add(&PbwTensor::pure(&PbwElement::k(-1), &PbwElement::f()))
}

fn delta_k(a: i64) -> PbwTensor {
    PbwTensor::pure(&PbwElement::k(a), &PbwElement::k(a))
}
