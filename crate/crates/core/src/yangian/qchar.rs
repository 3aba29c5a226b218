//! H(u)-spectra and q-characters `Σ Y_{a₁}⋯Y_{b₁}⁻¹⋯`.

use super::gauss::gauss_decompose;
use super::tseries::{evaluation_T, yangian_eval_module, TSeries};
use super::u;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar, Series};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// `base + offset`, with `base = None` for the zero symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftParam {
    pub base: Option<String>,
    pub offset: Rational,
}

impl ShiftParam {
    pub fn new(base: Option<&str>, offset: Rational) -> Self {
        ShiftParam { base: base.map(str::to_string), offset }
    }

    pub fn symbol(base: &str) -> Self {
        Self::new(Some(base), Rational::ZERO)
    }

    pub fn number(offset: Rational) -> Self {
        Self::new(None, offset)
    }

    pub fn shift(&self, by: &Rational) -> Self {
        ShiftParam { base: self.base.clone(), offset: &self.offset + by }
    }

    pub fn to_scalar(&self) -> Scalar {
        let b = self.base.as_deref().map(Scalar::var).unwrap_or_else(Scalar::zero);
        &b + &Scalar::from(self.offset.clone())
    }

    /// `a`, `a+1/2`, `a-1`, `1/2`, `-1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad shift parameter {s:?}"));
        let num = |t: &str| t.parse::<Rational>().map_err(|_| bad());
        if s.is_empty() {
            return Err(bad());
        }
        if s.starts_with(|c: char| c.is_ascii_alphabetic()) {
            let cut = s.find(['+', '-']).unwrap_or(s.len());
            let (b, rest) = s.split_at(cut);
            if !b.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(bad());
            }
            let off = if rest.is_empty() { Rational::ZERO } else { num(rest.trim_start_matches('+'))? };
            return Ok(Self::new(Some(b), off));
        }
        Ok(Self::number(num(&s)?))
    }
}

impl fmt::Display for ShiftParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            None => write!(f, "{}", self.offset),
            Some(b) if self.offset.is_zero() => write!(f, "{b}"),
            Some(b) if self.offset.is_negative() => write!(f, "{b}{}", self.offset),
            Some(b) => write!(f, "{b}+{}", self.offset),
        }
    }
}

/// A Laurent monomial in the `Y_b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YMonomial(BTreeMap<ShiftParam, i64>);

impl YMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(b: ShiftParam, e: i64) -> Self {
        let mut m = Self::one();
        m.bump(b, e);
        m
    }

    fn bump(&mut self, b: ShiftParam, e: i64) {
        let v = self.0.entry(b.clone()).or_insert(0);
        *v += e;
        if *v == 0 {
            self.0.remove(&b);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (b, e) in &o.0 {
            out.bump(b.clone(), *e);
        }
        out
    }

    pub fn factors(&self) -> impl Iterator<Item = (&ShiftParam, &i64)> {
        self.0.iter()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&e| e >= 0)
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|(b, e)| format!("Y[{b}]^{e}")).collect();
        write!(f, "{}", parts.join(" · "))
    }
}

/// An element of `ℤ[Y_b^{±1}]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QCharacter(BTreeMap<YMonomial, i64>);

impl QCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(YMonomial::one())
    }

    pub fn monomial(m: YMonomial) -> Self {
        let mut c = Self::zero();
        c.bump(m, 1);
        c
    }

    fn bump(&mut self, m: YMonomial, c: i64) {
        let v = self.0.entry(m.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.0 {
            out.bump(m.clone(), *c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &i64)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of coefficients, the dimension of the module.
    pub fn dimension(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .0
            .iter()
            .map(|(m, c)| {
                let factors: Vec<Value> = m.0.iter().map(|(b, e)| json!({"base": b.base, "offset": b.offset.to_string(), "exp": e})).collect();
                json!({"coeff": c, "factors": factors})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |w: &str| Error::Parse(format!("q-character JSON: {w}"));
        let mut out = Self::zero();
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let c = t["coeff"].as_i64().ok_or_else(|| bad("coeff"))?;
            let mut m = YMonomial::one();
            for f in t["factors"].as_array().ok_or_else(|| bad("factors"))? {
                let off: Rational = f["offset"].as_str().ok_or_else(|| bad("offset"))?.parse().map_err(|_| bad("offset"))?;
                let e = f["exp"].as_i64().ok_or_else(|| bad("exp"))?;
                m.bump(ShiftParam::new(f["base"].as_str(), off), e);
            }
            out.bump(m, c);
        }
        Ok(out)
    }
}

impl fmt::Display for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.0.iter().map(|(m, c)| format!("{c} · {m}")).collect();
        parts.sort();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn qchar_multiply(a: &QCharacter, b: &QCharacter) -> QCharacter {
    let mut out = QCharacter::zero();
    for (m, c) in &a.0 {
        for (n, d) in &b.0 {
            out.bump(m.mul(n), c * d);
        }
    }
    out
}

pub fn dominant_monomials(chi: &QCharacter) -> Vec<YMonomial> {
    chi.0.keys().filter(|m| m.is_dominant()).cloned().collect()
}

/// A monic polynomial `Π (u − r)` given by its roots.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootPoly {
    pub roots: Vec<ShiftParam>,
}

impl RootPoly {
    pub fn to_scalar(&self, u: &Scalar) -> Scalar {
        self.roots.iter().fold(Scalar::one(), |acc, r| &acc * &(u - &r.to_scalar()))
    }
}

impl fmt::Display for RootPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.roots.iter().map(|r| format!("(u - ({r}))")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Monomial with `+1` at each root of `P` and `−1` at each root of `Q`.
pub fn eigen_to_monomial(p: &RootPoly, q: &RootPoly) -> Result<YMonomial> {
    if p.roots.iter().any(|r| q.roots.contains(r)) {
        return Err(Error::Domain(format!("P = {p} and Q = {q} are not coprime")));
    }
    let mut m = YMonomial::one();
    for r in &p.roots {
        m.bump(r.clone(), 1);
    }
    for r in &q.roots {
        m.bump(r.clone(), -1);
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct HSpectrum {
    /// Generalized eigenvalue series of `H(u)`, one per basis vector.
    pub eigen: Vec<Series<Scalar>>,
    /// Whether the joint eigenvectors span, i.e. generalized and geometric
    /// multiplicities agree.
    pub semisimple: bool,
}

/// The `H(u)` spectrum, reading eigenvalues off the diagonal once every
/// coefficient is triangular in the given basis.
pub fn h_spectrum(t: &TSeries, n: i32) -> Result<HSpectrum> {
    let g = gauss_decompose(t, n)?;
    let d = t.dim;
    let coeffs: Vec<&Matrix> = (0..=n).map(|k| g.h.coeff(k)).collect();
    let upper = coeffs.iter().all(|c| (0..d).all(|i| (0..i).all(|j| c[(i, j)].is_zero())));
    let lower = coeffs.iter().all(|c| (0..d).all(|i| (i + 1..d).all(|j| c[(i, j)].is_zero())));
    if !upper && !lower {
        return Err(Error::Unsupported("H(u) is not triangular in the tensor basis".into()));
    }
    let eigen: Vec<Series<Scalar>> = (0..d)
        .map(|i| {
            let terms: Vec<(i32, Scalar)> = (0..=n).map(|k| (-k, coeffs[k as usize][(i, i)].clone())).collect();
            Series::scalar(u(), &terms, n)
        })
        .collect();
    let mut geometric = 0;
    let mut seen: Vec<&Series<Scalar>> = Vec::new();
    for s in &eigen {
        if seen.iter().any(|o| o.agrees_with(s)) {
            continue;
        }
        seen.push(s);
        let ops: Vec<Matrix> = (0..=n as usize).map(|k| coeffs[k].sub(&Matrix::identity(d).scale(s.coeff(k as i32)))).collect();
        geometric += Matrix::vstack(&ops).nullspace().len();
    }
    Ok(HSpectrum { eigen, semisimple: geometric == d })
}

fn horner(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs.iter().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

/// Roots of a polynomial (coefficients highest first) among the candidates.
fn split(mut coeffs: Vec<Scalar>, candidates: &[ShiftParam]) -> Option<Vec<ShiftParam>> {
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        coeffs.remove(0);
    }
    let mut roots = Vec::new();
    'outer: while coeffs.len() > 1 {
        for c in candidates {
            let x = c.to_scalar();
            if horner(&coeffs, &x).is_zero() {
                let mut q = Vec::with_capacity(coeffs.len() - 1);
                let mut acc = Scalar::zero();
                for a in &coeffs[..coeffs.len() - 1] {
                    acc = &(&acc * &x) + a;
                    q.push(acc.clone());
                }
                coeffs = q;
                roots.push(c.clone());
                continue 'outer;
            }
        }
        return None;
    }
    Some(roots)
}

/// Recovers coprime monic `(P, Q)` with `h(u) = P(u+½)Q(u−½)/(P(u−½)Q(u+½))`
/// from a series known to order `N`, trying roots `base + k/2`.
pub fn reconstruct(h: &Series<Scalar>, bases: &[Option<String>], dmax: usize) -> Result<(RootPoly, RootPoly)> {
    let n = h.order() as usize;
    let hk = |k: usize| if k <= n { h.coeff(k as i32).clone() } else { Scalar::zero() };
    if !hk(0).is_one() {
        return Err(Error::Domain("H(u) eigenvalue must start with 1".into()));
    }
    let span = 2 * (dmax as i64 + n as i64) + 4;
    let mut candidates = Vec::new();
    for b in bases {
        for k in -span..=span {
            candidates.push(ShiftParam::new(b.as_deref(), Rational::new(k, 2)));
        }
    }
    for d in 0..=dmax {
        if n < 2 * d + 1 {
            break;
        }
        let rows: Vec<Vec<Scalar>> = (d + 1..=n).map(|k| (1..=d).map(|j| hk(k - j)).collect()).collect();
        let rhs: Vec<Scalar> = (d + 1..=n).map(|k| hk(k).neg_ref()).collect();
        let beta_tail = if d == 0 {
            if rhs.iter().all(Scalar::is_zero) {
                Some(Vec::new())
            } else {
                None
            }
        } else {
            Matrix::from_rows(rows).solve(&rhs)
        };
        let Some(tail) = beta_tail else { continue };
        let beta: Vec<Scalar> = std::iter::once(Scalar::one()).chain(tail).collect();
        let alpha: Vec<Scalar> = (0..=d).map(|i| (0..=i).fold(Scalar::zero(), |acc, j| &acc + &(&beta[j] * &hk(i - j)))).collect();
        let (Some(num), Some(den)) = (split(alpha, &candidates), split(beta, &candidates)) else {
            return Err(Error::Domain("H(u) eigenvalue does not split over the candidate roots".into()));
        };
        return solve_divisor(&num, &den);
    }
    Err(Error::Domain(format!("no rational reconstruction of degree <= {dmax} at order {n}")))
}

/// From the zeros and poles of `F(u+½)/F(u−½)`, recover `F = P/Q`.
fn solve_divisor(num: &[ShiftParam], den: &[ShiftParam]) -> Result<(RootPoly, RootPoly)> {
    // positions in units of ½ on each chain (base, parity)
    let twice = |r: &ShiftParam| -> Result<i64> {
        let t = &r.offset * &Rational::from_int(2);
        t.to_i64().filter(|_| t.is_integer()).ok_or_else(|| Error::Domain(format!("root {r} is not a half-integer shift")))
    };
    let mut chains: BTreeMap<(Option<String>, i64), BTreeMap<i64, i64>> = BTreeMap::new();
    for (rs, s) in [(num, 1), (den, -1)] {
        for r in rs {
            let t = twice(r)?;
            *chains.entry((r.base.clone(), t.rem_euclid(2))).or_default().entry(t).or_insert(0) += s;
        }
    }
    let (mut p, mut q) = (RootPoly::default(), RootPoly::default());
    for ((base, _), divisor) in chains {
        let (Some(&lo), Some(&hi)) = (divisor.keys().next(), divisor.keys().last()) else { continue };
        // n_x = m_{x+½} − m_{x−½}
        let mut m = 0i64;
        let mut x = lo;
        while x <= hi {
            m += divisor.get(&x).copied().unwrap_or(0);
            let root = ShiftParam::new(base.as_deref(), Rational::new(x + 1, 2));
            let target = if m > 0 { &mut p } else { &mut q };
            target.roots.extend(std::iter::repeat_n(root, m.unsigned_abs() as usize));
            x += 2;
        }
        if m != 0 {
            return Err(Error::Domain("H(u) eigenvalue is not of the form P(u+½)Q(u−½)/(P(u−½)Q(u+½))".into()));
        }
    }
    p.roots.sort();
    q.roots.sort();
    Ok((p, q))
}

/// `(P, Q)` for each weight vector of `V_m(a)`, top to bottom.
pub fn h_eigen_highest(m: usize, a: &ShiftParam, n: Option<i32>) -> Result<Vec<(RootPoly, RootPoly)>> {
    let n = n.unwrap_or(2 * m as i32 + 4);
    let t = evaluation_T(&yangian_eval_module(m, &a.to_scalar()), n);
    let bases = [a.base.clone()];
    let attempt = |t: &TSeries, n: i32| -> Result<Vec<(RootPoly, RootPoly)>> { h_spectrum(t, n)?.eigen.iter().map(|s| reconstruct(s, &bases, m)).collect() };
    attempt(&t, n).or_else(|_| attempt(&evaluation_T(&yangian_eval_module(m, &a.to_scalar()), 2 * n), 2 * n))
}

/// The q-character of `⊗ V_{mᵢ}(aᵢ)` from the `H(u)` spectrum of the tensor module.
pub fn qchar_from_tensor(factors: &[(usize, ShiftParam)]) -> Result<QCharacter> {
    let dmax: usize = factors.iter().map(|(m, _)| m).sum();
    let n = 2 * dmax as i32 + 2;
    let mut t = TSeries::identity(1, n);
    for (m, a) in factors {
        t = t.tensor(&evaluation_T(&yangian_eval_module(*m, &a.to_scalar()), n));
    }
    let mut bases: Vec<Option<String>> = factors.iter().map(|(_, a)| a.base.clone()).collect();
    bases.sort();
    bases.dedup();
    let spec = h_spectrum(&t, n)?;
    let mut chi = QCharacter::zero();
    for s in &spec.eigen {
        let (p, q) = reconstruct(s, &bases, dmax)?;
        chi.bump(eigen_to_monomial(&p, &q)?, 1);
    }
    Ok(chi)
}

pub fn qchar_from_module(m: usize, a: &ShiftParam) -> Result<QCharacter> {
    qchar_from_tensor(&[(m, a.clone())])
}

/// `Σ_k Y_{a−m/2}⋯Y_{a−m/2+m−k−1} · Y⁻¹_{a−m/2+m−k+1}⋯Y⁻¹_{a+m/2}`.
pub fn qchar_closed_form(m: usize, a: &ShiftParam) -> QCharacter {
    let at = |j: usize| a.shift(&Rational::new(2 * j as i64 - m as i64, 2));
    let mut chi = QCharacter::zero();
    for k in 0..=m {
        let mut mono = YMonomial::one();
        for j in 0..m - k {
            mono.bump(at(j), 1);
        }
        for j in m - k + 1..=m {
            mono.bump(at(j), -1);
        }
        chi.bump(mono, 1);
    }
    chi
}
