//! Quantum integers, factorials and binomials as Laurent polynomials.

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// The formal parameter q.
pub fn q() -> Scalar {
    Scalar::var("q")
}

/// [k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}, for any q (including roots of unity).
pub fn q_int_at(k: i64, q: &Scalar) -> Result<Scalar> {
    if k < 0 {
        return Err(Error::Domain(format!("q_int of negative argument {k}")));
    }
    let mut acc = Scalar::zero();
    for j in 0..k {
        acc = &acc + &q.pow(k - 1 - 2 * j);
    }
    Ok(acc)
}

pub fn q_factorial_at(k: i64, q: &Scalar) -> Result<Scalar> {
    if k < 0 {
        return Err(Error::Domain(format!("q_factorial of negative argument {k}")));
    }
    let mut acc = Scalar::one();
    for j in 1..=k {
        acc = &acc * &q_int_at(j, q)?;
    }
    Ok(acc)
}

/// Symmetric q-binomial via [n,k] = q^k [n-1,k] + q^{k-n} [n-1,k-1].
pub fn q_binomial_at(n: i64, k: i64, q: &Scalar) -> Result<Scalar> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("q_binomial({n},{k}) needs n >= k >= 0")));
    }
    let mut row = vec![Scalar::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j < m { &q.pow(j) * &row[j as usize] } else { Scalar::zero() };
            let right = if j > 0 { &q.pow(j - m) * &row[j as usize - 1] } else { Scalar::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

pub fn q_int(k: i64) -> Result<Scalar> {
    q_int_at(k, &q())
}

pub fn q_factorial(k: i64) -> Result<Scalar> {
    q_factorial_at(k, &q())
}

pub fn q_binomial(n: i64, k: i64) -> Result<Scalar> {
    q_binomial_at(n, k, &q())
}
