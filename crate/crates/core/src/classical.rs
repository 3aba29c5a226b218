//! Lie bialgebra structure on sl2: classical r-matrices, the cobracket and
//! Yang's rational r-matrix.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Basis index: 0 = e, 1 = f, 2 = h.
pub type Basis = u8;

pub const E: Basis = 0;
pub const F: Basis = 1;
pub const H: Basis = 2;

const NAMES: [&str; 3] = ["e", "f", "h"];

/// `[x_a, x_b]` as `(coefficient, basis)` or zero.
fn bracket_basis(a: Basis, b: Basis) -> Option<(i64, Basis)> {
    match (a, b) {
        (E, F) => Some((1, H)),
        (F, E) => Some((-1, H)),
        (H, E) => Some((2, E)),
        (E, H) => Some((-2, E)),
        (H, F) => Some((-2, F)),
        (F, H) => Some((2, F)),
        _ => None,
    }
}

/// An element of `sl2^{⊗k}` in the basis `{e, f, h}^{⊗k}`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieTensor {
    rank: usize,
    coeffs: BTreeMap<Vec<Basis>, Scalar>,
}

impl LieTensor {
    pub fn zero(rank: usize) -> Self {
        LieTensor { rank, coeffs: BTreeMap::new() }
    }

    pub fn basis(idx: &[Basis]) -> Self {
        Self::term(idx, Scalar::one())
    }

    pub fn term(idx: &[Basis], c: Scalar) -> Self {
        let mut t = Self::zero(idx.len());
        t.bump(idx.to_vec(), &c);
        t
    }

    pub fn e() -> Self {
        Self::basis(&[E])
    }

    pub fn f() -> Self {
        Self::basis(&[F])
    }

    pub fn h() -> Self {
        Self::basis(&[H])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: &[Basis]) -> Scalar {
        self.coeffs.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Basis>, &Scalar)> {
        self.coeffs.iter()
    }

    fn bump(&mut self, idx: Vec<Basis>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.coeffs.entry(idx.clone()).or_insert_with(Scalar::zero);
        *v = &*v + c;
        if v.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank, "tensor rank mismatch");
        let mut out = self.clone();
        for (i, c) in &o.coeffs {
            out.bump(i.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.rank);
        for (i, c) in &self.coeffs {
            out.bump(i.clone(), &(c * s));
        }
        out
    }

    pub fn tensor(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.rank + o.rank);
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                out.bump(i.iter().chain(j).copied().collect(), &(a * b));
            }
        }
        out
    }

    /// Permute tensor factors: slot `k` of the result is slot `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.rank);
        for (i, c) in &self.coeffs {
            out.bump(perm.iter().map(|&p| i[p]).collect(), c);
        }
        out
    }

    /// `r²¹` for a rank-2 tensor.
    pub fn flip(&self) -> Self {
        self.permute(&[1, 0])
    }

    /// The bracket applied in slot `slot` against `x ∈ g`: `[x, ·]` there.
    fn ad_slot(&self, x: &LieTensor, slot: usize) -> Self {
        let mut out = Self::zero(self.rank);
        for (xi, xc) in &x.coeffs {
            for (i, c) in &self.coeffs {
                if let Some((k, b)) = bracket_basis(xi[0], i[slot]) {
                    let mut j = i.clone();
                    j[slot] = b;
                    out.bump(j, &(&(xc * c) * &Scalar::int(k)));
                }
            }
        }
        out
    }

    /// The adjoint action `x·t = Σ_slots [x, ·]` of `x ∈ g`.
    pub fn ad(&self, x: &LieTensor) -> Self {
        (0..self.rank).fold(Self::zero(self.rank), |acc, s| acc.add(&self.ad_slot(x, s)))
    }

    /// `[a, b]` for `a, b ∈ g`.
    pub fn bracket(a: &LieTensor, b: &LieTensor) -> Self {
        b.ad_slot(a, 0)
    }

    /// `e⊗f + f⊗e + h⊗h/2`, the Casimir tensor for the trace form.
    pub fn omega() -> Self {
        LieTensor::basis(&[E, F]).add(&LieTensor::basis(&[F, E])).add(&LieTensor::term(&[H, H], Scalar::frac(1, 2)))
    }

    /// `h⊗h/4 + e⊗f`.
    pub fn standard_r() -> Self {
        LieTensor::term(&[H, H], Scalar::frac(1, 4)).add(&LieTensor::basis(&[E, F]))
    }

    /// `x∧y = x⊗y − y⊗x`.
    pub fn wedge(x: &LieTensor, y: &LieTensor) -> Self {
        x.tensor(y).sub(&y.tensor(x))
    }
}

impl fmt::Display for LieTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| format!("({c})*{}", i.iter().map(|&b| NAMES[b as usize]).collect::<Vec<_>>().join("⊗")))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LieTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as `{"rank": k, "terms": [[["e","f"], "1"], …]}`.
#[derive(Serialize, Deserialize)]
pub struct LieTensorJson {
    pub rank: usize,
    pub terms: Vec<(Vec<String>, String)>,
}

impl LieTensor {
    pub fn to_json(&self) -> LieTensorJson {
        LieTensorJson {
            rank: self.rank,
            terms: self.coeffs.iter().map(|(i, c)| (i.iter().map(|&b| NAMES[b as usize].to_string()).collect(), c.canonical())).collect(),
        }
    }

    pub fn from_json(j: &LieTensorJson) -> Result<Self> {
        let mut out = Self::zero(j.rank);
        for (idx, c) in &j.terms {
            if idx.len() != j.rank {
                return Err(Error::Dimension(format!("multi-index {idx:?} in a rank-{} tensor", j.rank)));
            }
            let idx = idx
                .iter()
                .map(|n| NAMES.iter().position(|m| m == n).map(|p| p as Basis).ok_or_else(|| Error::Parse(format!("unknown basis element {n}"))))
                .collect::<Result<Vec<_>>>()?;
            out.bump(idx, &Scalar::parse(c)?);
        }
        Ok(out)
    }
}

fn rank2(r: &LieTensor) -> Result<()> {
    if r.rank != 2 {
        return Err(Error::Dimension(format!("expected a tensor in g⊗g, got rank {}", r.rank)));
    }
    Ok(())
}

/// `[x, y]` on the pair of slots where both tensors live, for `Σ a⊗b` and `Σ c⊗d`.
fn cybe_terms(r: &LieTensor, s: &LieTensor, t: &LieTensor) -> LieTensor {
    let mut out = LieTensor::zero(3);
    for (i, a) in &r.coeffs {
        for (j, b) in &s.coeffs {
            let ab = a * b;
            // [r12, s13] = Σ [a_i, c_j] ⊗ b_i ⊗ d_j
            if let Some((k, x)) = bracket_basis(i[0], j[0]) {
                out.bump(vec![x, i[1], j[1]], &(&ab * &Scalar::int(k)));
            }
        }
    }
    for (i, a) in &r.coeffs {
        for (j, b) in &t.coeffs {
            // [r12, t23] = Σ a_i ⊗ [b_i, c_j] ⊗ d_j
            if let Some((k, x)) = bracket_basis(i[1], j[0]) {
                out.bump(vec![i[0], x, j[1]], &(&(a * b) * &Scalar::int(k)));
            }
        }
    }
    for (i, a) in &s.coeffs {
        for (j, b) in &t.coeffs {
            // [s13, t23] = Σ a_i ⊗ c_j ⊗ [b_i, d_j]
            if let Some((k, x)) = bracket_basis(i[1], j[1]) {
                out.bump(vec![i[0], j[0], x], &(&(a * b) * &Scalar::int(k)));
            }
        }
    }
    out
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]`.
pub fn cybe_defect(r: &LieTensor) -> Result<LieTensor> {
    rank2(r)?;
    Ok(cybe_terms(r, r, r))
}

/// `δ(x) = [x⊗1 + 1⊗x, r]`.
pub fn cobracket(x: &LieTensor, r: &LieTensor) -> Result<LieTensor> {
    rank2(r)?;
    if x.rank != 1 {
        return Err(Error::Dimension("cobracket takes an element of g".into()));
    }
    Ok(r.ad(x))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CobracketReport {
    pub skew: bool,
    pub cocycle: bool,
    pub co_jacobi: bool,
    /// `c` with `δ(e) = c·e∧h`, when `δ(e)` is such a multiple.
    pub e_constant: Option<Scalar>,
}

impl CobracketReport {
    pub fn all(&self) -> bool {
        self.skew && self.cocycle && self.co_jacobi
    }
}

pub fn cobracket_checks(r: &LieTensor) -> Result<CobracketReport> {
    rank2(r)?;
    let basis = [LieTensor::e(), LieTensor::f(), LieTensor::h()];
    let deltas = basis.iter().map(|x| cobracket(x, r)).collect::<Result<Vec<_>>>()?;
    let skew = deltas.iter().all(|d| d.flip() == d.scale(&Scalar::int(-1)));
    // δ([x,y]) = x·δ(y) − y·δ(x)
    let mut cocycle = true;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let lhs = cobracket(&LieTensor::bracket(x, y), r)?;
            if lhs != deltas[j].ad(x).sub(&deltas[i].ad(y)) {
                cocycle = false;
            }
        }
    }
    // dual bracket [ξ^a, ξ^b] = Σ_k (coefficient of x_a⊗x_b in δ(x_k)) ξ^k
    let dual = |a: Basis, b: Basis| -> LieTensor {
        let mut out = LieTensor::zero(1);
        for (k, d) in deltas.iter().enumerate() {
            out.bump(vec![k as Basis], &d.coeff(&[a, b]));
        }
        out
    };
    let dual_bracket = |u: &LieTensor, v: &LieTensor| -> LieTensor {
        let mut out = LieTensor::zero(1);
        for (i, a) in &u.coeffs {
            for (j, b) in &v.coeffs {
                out = out.add(&dual(i[0], j[0]).scale(&(a * b)));
            }
        }
        out
    };
    let mut co_jacobi = true;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let (xa, xb, xc) = (LieTensor::basis(&[a]), LieTensor::basis(&[b]), LieTensor::basis(&[c]));
                let j = dual_bracket(&xa, &dual_bracket(&xb, &xc))
                    .add(&dual_bracket(&xb, &dual_bracket(&xc, &xa)))
                    .add(&dual_bracket(&xc, &dual_bracket(&xa, &xb)));
                if !j.is_zero() {
                    co_jacobi = false;
                }
            }
        }
    }
    let eh = LieTensor::wedge(&LieTensor::e(), &LieTensor::h());
    let c = deltas[0].coeff(&[E, H]);
    let e_constant = (deltas[0] == eh.scale(&c)).then_some(c);
    Ok(CobracketReport { skew, cocycle, co_jacobi, e_constant })
}

/// Whether `[x⊗1 + 1⊗x, Ω] = 0` for every basis `x`.
pub fn casimir_invariance(omega: &LieTensor) -> Result<bool> {
    rank2(omega)?;
    Ok([LieTensor::e(), LieTensor::f(), LieTensor::h()].iter().all(|x| omega.ad(x).is_zero()))
}

/// The spectral CYBE defect of `r(z)` in `g^{⊗3} ⊗ ℚ(z₁, z₂, z₃)`.
pub fn spectral_cybe_defect(r: impl Fn(&Scalar) -> Result<LieTensor>) -> Result<LieTensor> {
    let (z1, z2, z3) = (Scalar::var("z1"), Scalar::var("z2"), Scalar::var("z3"));
    let r12 = r(&(&z1 - &z2))?;
    let r13 = r(&(&z1 - &z3))?;
    let r23 = r(&(&z2 - &z3))?;
    for t in [&r12, &r13, &r23] {
        rank2(t)?;
    }
    Ok(cybe_terms(&r12, &r13, &r23))
}

/// The spectral CYBE for Yang's `r(z) = Ω/z`.
pub fn yang_cybe_check() -> bool {
    spectral_cybe_defect(|z| Ok(LieTensor::omega().scale(&z.inv()))).map(|d| d.is_zero()).unwrap_or(false)
}
