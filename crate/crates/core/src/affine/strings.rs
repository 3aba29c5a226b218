//! Points `base·q^k`, q²-strings and the Chari–Pressley irreducibility criterion.

use super::q;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// `base·q^qexp`; the base `"1"` is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EvalPoint {
    pub base: String,
    pub qexp: i64,
}

impl EvalPoint {
    pub fn new(base: &str, qexp: i64) -> Self {
        EvalPoint { base: base.to_string(), qexp }
    }

    pub fn symbol(base: &str) -> Self {
        Self::new(base, 0)
    }

    pub fn unit() -> Self {
        Self::new("1", 0)
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::new(&self.base, self.qexp + k)
    }

    pub fn to_scalar(&self) -> Scalar {
        let b = if self.base == "1" { Scalar::one() } else { Scalar::var(&self.base) };
        &b * &q().pow(self.qexp)
    }

    /// `sym`, `sym*q^k`, `q^k` or `1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad evaluation point {s:?}; expected sym*q^k"));
        let exp = |t: &str| -> Result<i64> {
            match t.strip_prefix("q^") {
                Some(k) => k.trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| bad()),
                None if t == "q" => Ok(1),
                None => Err(bad()),
            }
        };
        if let Some((b, e)) = s.split_once('*') {
            return Ok(Self::new(b.trim(), exp(e.trim())?));
        }
        if s == "q" || s.starts_with("q^") {
            return Ok(Self::new("1", exp(s)?));
        }
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(bad());
        }
        Ok(Self::symbol(s))
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.base.as_str(), self.qexp) {
            (b, 0) => write!(f, "{b}"),
            ("1", k) => write!(f, "q^{k}"),
            (b, k) => write!(f, "{b}*q^{k}"),
        }
    }
}

/// `{start, q²·start, …, q^{2(length−1)}·start}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StringDesc {
    pub start: EvalPoint,
    pub length: usize,
}

impl StringDesc {
    pub fn new(start: EvalPoint, length: usize) -> Result<Self> {
        if length == 0 {
            return Err(Error::Domain("strings have length >= 1".into()));
        }
        Ok(StringDesc { start, length })
    }

    pub fn points(&self) -> Vec<EvalPoint> {
        (0..self.length as i64).map(|j| self.start.shift(2 * j)).collect()
    }

    pub fn end(&self) -> EvalPoint {
        self.start.shift(2 * (self.length as i64 - 1))
    }
}

impl fmt::Display for StringDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &EvalPoint| if p.base == "1" { format!("q^{}", p.qexp) } else { format!("{}*q^{}", p.base, p.qexp) };
        write!(f, "[{} .. {}]", show(&self.start), show(&self.end()))
    }
}

/// `s_a(z) = {q^{−a+1}z, …, q^{a−1}z}`.
pub fn string_of(a: usize, z: &EvalPoint) -> Result<StringDesc> {
    StringDesc::new(z.shift(1 - a as i64), a)
}

/// False exactly when `S ∪ T` (as sets) is a string properly containing both.
pub fn general_position(s: &StringDesc, t: &StringDesc) -> bool {
    if s.start.base != t.start.base || (s.start.qexp - t.start.qexp).rem_euclid(2) != 0 {
        return true;
    }
    let (a0, a1) = (s.start.qexp, s.end().qexp);
    let (b0, b1) = (t.start.qexp, t.end().qexp);
    // the union is a single string iff there is no gap between the two runs
    let joined = a0.max(b0) <= a1.min(b1) + 2;
    let (lo, hi) = (a0.min(b0), a1.max(b1));
    let proper_s = (lo, hi) != (a0, a1);
    let proper_t = (lo, hi) != (b0, b1);
    !(joined && proper_s && proper_t)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringMultiset {
    pub points: Vec<EvalPoint>,
}

impl StringMultiset {
    pub fn new(points: Vec<EvalPoint>) -> Self {
        StringMultiset { points }
    }

    /// `sym:k1,k2,…[;sym2:…]` with each `k` counting steps of `q²`, so
    /// `z:0,1` is `{z, q²z}`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut points = Vec::new();
        for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (b, ks) = part.split_once(':').ok_or_else(|| Error::Parse(format!("expected sym:k1,k2,… in {part:?}")))?;
            let base = EvalPoint::parse(b)?;
            for k in ks.split(',').map(str::trim).filter(|k| !k.is_empty()) {
                let k: i64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
                points.push(base.shift(2 * k));
            }
        }
        Ok(StringMultiset { points })
    }
}

/// The unique partition into strings pairwise in general position, sorted.
pub fn decompose_into_strings(m: &StringMultiset) -> Vec<StringDesc> {
    // q²-orbits: same base and the same exponent parity
    let mut orbits: BTreeMap<(String, i64), BTreeMap<i64, usize>> = BTreeMap::new();
    for p in &m.points {
        *orbits.entry((p.base.clone(), p.qexp.rem_euclid(2))).or_default().entry(p.qexp).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    for ((base, _), mut counts) in orbits {
        while let Some((&lo, _)) = counts.iter().next() {
            let mut len = 0;
            while let Some(c) = counts.get_mut(&(lo + 2 * len)) {
                *c -= 1;
                if *c == 0 {
                    counts.remove(&(lo + 2 * len));
                }
                len += 1;
            }
            out.push(StringDesc { start: EvalPoint::new(&base, lo), length: len as usize });
        }
    }
    out.sort();
    out
}

/// Whether `⊗ V_{aᵢ}(zᵢ)` is irreducible: all strings pairwise in general position.
pub fn irreducibility_test(factors: &[(usize, EvalPoint)]) -> Result<bool> {
    let strings = factors.iter().map(|(a, z)| string_of(*a, z)).collect::<Result<Vec<_>>>()?;
    Ok(strings.iter().enumerate().all(|(i, s)| strings[i + 1..].iter().all(|t| general_position(s, t))))
}

/// `Π (1 − x/p)` over the points `p` of all the strings, in the variable `var`.
pub fn drinfeld_polynomial(factors: &[(usize, EvalPoint)], var: &str) -> Result<Scalar> {
    if factors.iter().any(|(_, z)| z.base == var) || var == "q" {
        return Err(Error::Domain(format!("polynomial variable {var} clashes with a point symbol")));
    }
    if !irreducibility_test(factors)? {
        return Err(Error::Domain("factors are not pairwise in general position".into()));
    }
    let x = Scalar::var(var);
    let mut p = Scalar::one();
    for (a, z) in factors {
        for pt in string_of(*a, z)?.points() {
            p = &p * &(&Scalar::one() - &(&x / &pt.to_scalar()));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn z() -> EvalPoint {
        EvalPoint::symbol("z")
    }

    #[test]
    fn points_parse_and_print() {
        for s in ["z", "z*q^3", "q^-2", "w*q^-1"] {
            assert_eq!(EvalPoint::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(EvalPoint::parse("1").unwrap(), EvalPoint::unit());
        assert_eq!(EvalPoint::parse("z*q").unwrap(), z().shift(1));
        assert!(EvalPoint::parse("z*t^2").is_err());
        assert_eq!(string_of(3, &z()).unwrap().to_string(), "[z*q^-2 .. z*q^2]");
        assert!(string_of(0, &z()).is_err());
    }

    #[test]
    fn positions() {
        let s = |a, p: EvalPoint| string_of(a, &p).unwrap();
        assert!(!general_position(&s(1, z()), &s(1, z().shift(2))));
        assert!(general_position(&s(1, z()), &s(1, z())));
        assert!(general_position(&s(1, z()), &s(1, z().shift(6))));
        assert!(general_position(&s(1, z()), &s(1, EvalPoint::symbol("w"))));
        assert!(general_position(&s(1, z()), &s(1, z().shift(1))));
        // nested strings: no proper containment of the larger one
        assert!(general_position(&s(3, z()), &s(1, z())));
        assert!(!general_position(&s(2, z()), &s(2, z().shift(2))));
    }

    #[test]
    fn example_figures() {
        let m = StringMultiset::parse("z:0,1,2,2,3,3,3,4").unwrap();
        let d = decompose_into_strings(&m);
        let mut lens: Vec<usize> = d.iter().map(|s| s.length).collect();
        lens.sort();
        assert_eq!(lens, vec![1, 2, 5]);
        assert!(d.contains(&StringDesc { start: z(), length: 5 }));
        assert!(d.contains(&StringDesc { start: z().shift(4), length: 2 }));
        assert!(d.contains(&StringDesc { start: z().shift(6), length: 1 }));
        let d = decompose_into_strings(&StringMultiset::parse("z:0,0,1,2,2").unwrap());
        assert_eq!(
            d,
            vec![StringDesc { start: z(), length: 1 }, StringDesc { start: z(), length: 3 }, StringDesc { start: z().shift(4), length: 1 }]
        );
        assert_eq!(decompose_into_strings(&StringMultiset::new(vec![z()])), vec![StringDesc { start: z(), length: 1 }]);
    }

    /// Every partition of the multiset of exponents (steps of q²) into strings
    /// that are pairwise in general position.
    fn brute_force(points: &[i64]) -> BTreeSet<Vec<(i64, usize)>> {
        fn go(counts: &mut BTreeMap<i64, usize>, acc: &mut Vec<(i64, usize)>, out: &mut BTreeSet<Vec<(i64, usize)>>) {
            let Some((&lo, _)) = counts.iter().next() else {
                let mut v = acc.clone();
                v.sort();
                let ok = v.iter().enumerate().all(|(i, a)| {
                    v[i + 1..].iter().all(|b| {
                        let (sa, sb) = (StringDesc { start: EvalPoint::new("z", 2 * a.0), length: a.1 }, StringDesc { start: EvalPoint::new("z", 2 * b.0), length: b.1 });
                        general_position(&sa, &sb)
                    })
                });
                if ok {
                    out.insert(v);
                }
                return;
            };
            let mut len = 0;
            while counts.get(&(lo + len as i64)).is_some_and(|&c| c > 0) {
                len += 1;
                for j in 0..len as i64 {
                    *counts.get_mut(&(lo + j)).unwrap() -= 1;
                }
                counts.retain(|_, c| *c > 0);
                acc.push((lo, len));
                go(counts, acc, out);
                acc.pop();
                for j in 0..len as i64 {
                    *counts.entry(lo + j).or_insert(0) += 1;
                }
            }
        }
        let mut counts = BTreeMap::new();
        for p in points {
            *counts.entry(*p).or_insert(0) += 1;
        }
        let mut out = BTreeSet::new();
        go(&mut counts, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn brute_force_small() {
        let bf = brute_force(&[0, 1, 2, 2, 3, 3, 3, 4]);
        assert_eq!(bf.len(), 1);
    }

    proptest! {
        #[test]
        fn unique_decomposition(points in proptest::collection::vec(0i64..7, 1..8)) {
            let bf = brute_force(&points);
            prop_assert_eq!(bf.len(), 1);
            let ms = StringMultiset::new(points.iter().map(|k| z().shift(2 * k)).collect());
            let got: Vec<(i64, usize)> = decompose_into_strings(&ms).iter().map(|s| (s.start.qexp / 2, s.length)).collect();
            prop_assert_eq!(&got, bf.iter().next().unwrap());
        }
    }

    #[test]
    fn irreducibility() {
        assert!(!irreducibility_test(&[(1, z()), (1, z().shift(2))]).unwrap());
        assert!(irreducibility_test(&[(1, z()), (1, EvalPoint::symbol("w"))]).unwrap());
        assert!(irreducibility_test(&[(2, z())]).unwrap());
        assert!(irreducibility_test(&[]).unwrap());
    }

    #[test]
    fn drinfeld_polynomials() {
        let x = Scalar::var("x");
        let qq = q();
        for a in 1..4usize {
            let mut expect = Scalar::one();
            for j in 0..a as i64 {
                expect = &expect * &(&Scalar::one() - &(&qq.pow(-(a as i64) + 1 + 2 * j) * &x));
            }
            assert_eq!(drinfeld_polynomial(&[(a, EvalPoint::unit())], "x").unwrap(), expect);
        }
        assert_eq!(drinfeld_polynomial(&[], "x").unwrap(), Scalar::one());
        let z0 = EvalPoint::symbol("z0");
        assert_eq!(drinfeld_polynomial(&[(1, z0.clone())], "x").unwrap(), &Scalar::one() - &(&x / &Scalar::var("z0")));
        assert!(drinfeld_polynomial(&[(1, z()), (1, z().shift(2))], "x").is_err());
        assert!(drinfeld_polynomial(&[(1, z())], "z").is_err());
    }
}
