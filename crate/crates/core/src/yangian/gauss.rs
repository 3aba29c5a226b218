//! Gauss decomposition of `T(u)` and the loop relations.

use super::tseries::TSeries;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Series;

/// `T = T⁺T⁰T⁻` with `T⁺ = [[1, x⁺], [0, 1]]`, `T⁰ = diag(d₁, d₂)`,
/// `T⁻ = [[1, 0], [x⁻, 1]]` and `H = d₁d₂⁻¹`.
#[derive(Clone, Debug)]
pub struct Gauss {
    pub xplus: Series<Matrix>,
    pub xminus: Series<Matrix>,
    pub d1: Series<Matrix>,
    pub d2: Series<Matrix>,
    pub h: Series<Matrix>,
}

impl Gauss {
    pub fn order(&self) -> i32 {
        self.h.order()
    }

    /// `H_n`, the coefficient of `u^{−n−1}`.
    pub fn h_coeff(&self, n: usize) -> &Matrix {
        self.h.coeff(n as i32 + 1)
    }

    pub fn x_coeff(&self, plus: bool, n: usize) -> &Matrix {
        if plus {
            self.xplus.coeff(n as i32 + 1)
        } else {
            self.xminus.coeff(n as i32 + 1)
        }
    }
}

/// `d₂ = t₂₂`, `x⁺ = t₁₂d₂⁻¹`, `x⁻ = d₂⁻¹t₂₁`, `d₁ = t₁₁ − t₁₂d₂⁻¹t₂₁`, to order `n`.
pub fn gauss_decompose(t: &TSeries, n: i32) -> Result<Gauss> {
    let tr = |i: usize, j: usize| t.get(i, j).truncate(n);
    let d2 = tr(1, 1);
    let d2i = d2.invert()?;
    let xplus = tr(0, 1).mul(&d2i);
    let xminus = d2i.mul(&tr(1, 0));
    let d1 = tr(0, 0).sub(&xplus.mul(&tr(1, 0)));
    let h = d1.mul(&d2i);
    Ok(Gauss { xplus, xminus, d1, d2, h })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopReport {
    pub failures: Vec<String>,
    pub checked: usize,
}

impl LoopReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The loop relations among `H_k, x^±_k` whose indices are all known at the
/// truncation order.
pub fn loop_relation_check(g: &Gauss) -> LoopReport {
    let top = g.order().max(0) as usize; // indices 0..top
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |name: String, ok: bool| {
        checked += 1;
        if !ok {
            failures.push(name);
        }
    };
    let hk = |k: usize| g.h_coeff(k);
    for k in 0..top {
        for l in 0..top {
            check(format!("[H{k},H{l}] = 0"), hk(k).commutator(hk(l)).is_zero());
        }
    }
    for (plus, sgn, s) in [(true, 1i64, "+"), (false, -1, "-")] {
        let x = |k: usize| g.x_coeff(plus, k);
        let sc = crate::scalar::Scalar::int(sgn);
        for k in 0..top {
            check(format!("[H0,x{s}{k}] = {s}2 x{s}{k}"), hk(0).commutator(x(k)) == x(k).scale(&crate::scalar::Scalar::int(2 * sgn)));
        }
        for k in 0..top.saturating_sub(1) {
            for l in 0..top.saturating_sub(1) {
                let lhs = hk(k + 1).commutator(x(l)).sub(&hk(k).commutator(x(l + 1)));
                let rhs = hk(k).mul(x(l)).add(&x(l).mul(hk(k))).scale(&sc);
                check(format!("[H{},x{s}{l}] - [H{k},x{s}{}]", k + 1, l + 1), lhs == rhs);
                let lhs = x(k + 1).commutator(x(l)).sub(&x(k).commutator(x(l + 1)));
                let rhs = x(k).mul(x(l)).add(&x(l).mul(x(k))).scale(&sc);
                check(format!("[x{s}{},x{s}{l}] - [x{s}{k},x{s}{}]", k + 1, l + 1), lhs == rhs);
            }
        }
    }
    for k in 0..top {
        for l in 0..top - k {
            check(format!("[x+{k},x-{l}] = H{}", k + l), g.x_coeff(true, k).commutator(g.x_coeff(false, l)) == *hk(k + l));
        }
    }
    LoopReport { failures, checked }
}

#[cfg(test)]
mod tests {
    use super::super::tseries::{evaluation_T, yangian_eval_module, Gl2Module};
    use super::*;
    use crate::scalar::Scalar;

    fn a() -> Scalar {
        Scalar::var("a")
    }

    #[test]
    fn reassembles_t() {
        let t = evaluation_T(&yangian_eval_module(1, &a()), 5);
        let g = gauss_decompose(&t, 5).unwrap();
        // T⁺T⁰T⁻ entries
        let t11 = g.d1.add(&g.xplus.mul(&g.d2).mul(&g.xminus));
        assert!(t11.agrees_with(&t.get(0, 0).truncate(5)));
        assert!(g.xplus.mul(&g.d2).agrees_with(&t.get(0, 1).truncate(5)));
        assert!(g.d2.mul(&g.xminus).agrees_with(&t.get(1, 0).truncate(5)));
        assert!(g.d1.mul(&g.d2).agrees_with(&g.d2.mul(&g.d1)));
    }

    #[test]
    fn loop_relations_on_evaluation_modules() {
        for m in 0..3 {
            for n in [2, 4, 6] {
                let t = evaluation_T(&yangian_eval_module(m, &a()), n);
                let rep = loop_relation_check(&gauss_decompose(&t, n).unwrap());
                assert!(rep.passed(), "m {m} N {n}: {:?}", rep.failures);
            }
        }
    }

    #[test]
    fn trivial_module() {
        let g = gauss_decompose(&evaluation_T(&Gl2Module::trivial(), 4), 4).unwrap();
        assert!(g.h.coeff(0).is_identity());
        assert!((1..=4).all(|k| g.h.coeff(k).is_zero() && g.xplus.coeff(k).is_zero() && g.xminus.coeff(k).is_zero()));
        assert!(loop_relation_check(&g).passed());
    }

    #[test]
    fn leading_coefficients_are_sl2() {
        let w = yangian_eval_module(2, &a());
        let g = gauss_decompose(&evaluation_T(&w, 3), 3).unwrap();
        assert_eq!(*g.h_coeff(0), w.e[0][0].sub(&w.e[1][1]));
        assert_eq!(g.x_coeff(true, 0), &w.e[0][1]);
        assert_eq!(g.x_coeff(false, 0), &w.e[1][0]);
    }
}
