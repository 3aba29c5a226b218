//! Sparse vectors over a basis, used for algebra elements and tensors.

use crate::scalar::Scalar;
use std::collections::HashMap;
use std::fmt;

/// Sorted `(index, coefficient)` pairs with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Elem(Vec<(usize, Scalar)>);

impl Elem {
    pub fn zero() -> Self {
        Elem(Vec::new())
    }

    pub fn basis(i: usize) -> Self {
        Elem(vec![(i, Scalar::one())])
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Elem(vec![(i, c)])
        }
    }

    /// Merges duplicates and drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Acc::new();
        for (i, c) in pairs {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        Elem(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in &self.0 {
            v[*i] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        match self.0.binary_search_by_key(&i, |t| t.0) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|t| t.0)
    }

    pub fn add(&self, o: &Elem) -> Elem {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Elem) -> Elem {
        self.merge(o, true)
    }

    fn merge(&self, o: &Elem, negate: bool) -> Elem {
        let (a, b) = (&self.0, &o.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &Scalar| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            if a[i].0 < b[j].0 {
                out.push(a[i].clone());
                i += 1;
            } else if a[i].0 > b[j].0 {
                out.push((b[j].0, sgn(&b[j].1)));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, c)| (*k, sgn(c))));
        Elem(out)
    }

    pub fn scale(&self, s: &Scalar) -> Elem {
        if s.is_zero() {
            return Elem::zero();
        }
        if s.is_one() {
            return self.clone();
        }
        Elem(self.0.iter().map(|(i, c)| (*i, c * s)).collect())
    }

    pub fn neg(&self) -> Elem {
        Elem(self.0.iter().map(|(i, c)| (*i, -c)).collect())
    }

    /// Relabels indices; the map must be injective on the support.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> Elem {
        let mut v: Vec<(usize, Scalar)> = self.0.iter().map(|(i, c)| (f(*i), c.clone())).collect();
        v.sort_by_key(|t| t.0);
        Elem(v)
    }

    /// Applies a linear map given on basis vectors.
    pub fn map_linear(&self, f: impl Fn(usize) -> Elem) -> Elem {
        let mut acc = Acc::new();
        for (i, c) in &self.0 {
            acc.add_scaled(&f(*i), c);
        }
        acc.finish()
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (i, c)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})[{i}]")?;
        }
        Ok(())
    }
}

/// Hash-map accumulator for building sparse vectors.
#[derive(Default)]
pub struct Acc(HashMap<usize, Scalar>);

impl Acc {
    pub fn new() -> Self {
        Acc(HashMap::new())
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(x) => *x = &*x + c,
            None => {
                self.0.insert(i, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, e: &Elem, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (i, c) in e.terms() {
            if s.is_one() {
                self.add(*i, c);
            } else {
                self.add(*i, &(c * s));
            }
        }
    }

    pub fn finish(self) -> Elem {
        let mut v: Vec<(usize, Scalar)> = self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|t| t.0);
        Elem(v)
    }
}

/// Splits a tensor index with `k` factors of dimension `n`, most significant first.
pub fn split_index(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in (0..k).rev() {
        out[slot] = idx % n;
        idx /= n;
    }
    out
}

pub fn join_index(parts: &[usize], n: usize) -> usize {
    parts.iter().fold(0, |acc, &p| acc * n + p)
}
