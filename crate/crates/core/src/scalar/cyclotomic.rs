//! Cyclotomic fields ℚ(ζ_ℓ) in the power basis modulo Φ_ℓ.

use super::rational::Rational;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Field context: ℓ and the integer coefficients of Φ_ℓ, low degree first.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    pub ell: u32,
    pub phi: Vec<i64>,
}

impl CycloField {
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

fn poly_div_exact_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; r.len().saturating_sub(dd)];
    for k in (0..q.len()).rev() {
        let c = r[k + dd] / lead;
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            r[k + i] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Coefficients of the n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut p = num;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact_int(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn fields() -> &'static Mutex<HashMap<u32, &'static CycloField>> {
    static F: OnceLock<Mutex<HashMap<u32, &'static CycloField>>> = OnceLock::new();
    F.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The field ℚ(ζ_ℓ) for odd ℓ ≥ 3.
pub fn cyclotomic_field(ell: u32) -> Result<&'static CycloField> {
    if ell < 3 || ell % 2 == 0 {
        return Err(Error::Domain(format!("cyclotomic field needs odd ell >= 3, got {ell}")));
    }
    let mut map = fields().lock().expect("field cache poisoned");
    if let Some(f) = map.get(&ell) {
        return Ok(f);
    }
    let f: &'static CycloField = Box::leak(Box::new(CycloField { ell, phi: cyclotomic_poly(ell) }));
    map.insert(ell, f);
    Ok(f)
}

/// An element of ℚ(ζ_ℓ); `coeffs.len() == deg Φ_ℓ`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: &'static CycloField,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.ell == other.field.ell && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.ell.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    pub fn from_rational(field: &'static CycloField, c: Rational) -> Self {
        let mut coeffs = vec![Rational::ZERO; field.degree()];
        coeffs[0] = c;
        Cyclotomic { field, coeffs }
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(field: &'static CycloField, k: i64) -> Self {
        let e = k.rem_euclid(field.ell as i64) as usize;
        let mut v = vec![Rational::ZERO; e + 1];
        v[e] = Rational::ONE;
        Self::from_coeffs(field, v)
    }

    /// Reduces an arbitrary coefficient list modulo Φ_ℓ.
    pub fn from_coeffs(field: &'static CycloField, mut v: Vec<Rational>) -> Self {
        let d = field.degree();
        for k in (d..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            if c.is_zero() {
                continue;
            }
            for (i, &p) in field.phi[..d].iter().enumerate() {
                if p != 0 {
                    let t = &c * &Rational::from_int(p);
                    v[k - d + i] = &v[k - d + i] - &t;
                }
            }
        }
        v.resize(d, Rational::ZERO);
        Cyclotomic { field, coeffs: v }
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn ell(&self) -> u32 {
        self.field.ell
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { field: self.field, coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { field: self.field, coeffs }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { field: self.field, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclotomic { field: self.field, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.field.degree();
        let mut v = vec![Rational::ZERO; 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        Self::from_coeffs(self.field, v)
    }

    /// Multiplicative inverse via the multiplication matrix.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.field.degree();
        // Column j of M is self * ζ^j.
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        let zeta = Self::zeta_pow(self.field, 1);
        for _ in 0..d {
            cols.push(cur.coeffs.clone());
            cur = cur.mul(&zeta);
        }
        // Solve M y = e_0 by Gauss-Jordan on the augmented matrix.
        let mut a: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..d {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for k in c..=d {
                        let t = &f * &a[c][k];
                        a[r][k] = &a[r][k] - &t;
                    }
                }
            }
        }
        Some(Cyclotomic { field: self.field, coeffs: a.into_iter().map(|mut r| r.pop().unwrap()).collect() })
    }

    pub fn size(&self) -> u64 {
        self.coeffs.iter().map(|c| if c.is_zero() { 0 } else { 1 + c.height() }).sum()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = format!("zeta{}", self.field.ell);
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let mon = match k {
                0 => String::new(),
                1 => name.clone(),
                _ => format!("{name}^{k}"),
            };
            if mon.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mon)?;
            } else {
                write!(f, "{a}*{mon}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn field_degrees_and_rejections() {
        assert_eq!(cyclotomic_field(3).unwrap().degree(), 2);
        assert_eq!(cyclotomic_field(5).unwrap().degree(), 4);
        assert!(cyclotomic_field(4).is_err());
        assert!(cyclotomic_field(1).is_err());
    }

    #[test]
    fn zeta_cubed_is_one() {
        let f = cyclotomic_field(3).unwrap();
        let z = Cyclotomic::zeta_pow(f, 1);
        assert_eq!(z.mul(&z).mul(&z).as_rational(), Some(Rational::ONE));
        let s = Cyclotomic::from_rational(f, Rational::ONE).add(&z).add(&z.mul(&z));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse() {
        let f = cyclotomic_field(7).unwrap();
        let z = Cyclotomic::zeta_pow(f, 1);
        let x = z.add(&Cyclotomic::from_rational(f, Rational::from_int(3)));
        assert_eq!(x.mul(&x.inv().unwrap()).as_rational(), Some(Rational::ONE));
    }
}
