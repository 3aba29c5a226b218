//! Incremental sparse row-reduced echelon basis of a subspace.

use super::elem::{Acc, Elem};
use std::collections::HashMap;

/// Rows are normalized to 1 at their pivot (the largest index in the row)
/// and vanish at every other pivot, so reduction is a single pass.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Elem>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Elem] {
        &self.rows
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_row.contains_key(&i)
    }

    /// Normal form modulo the subspace; supported off the pivots.
    pub fn reduce(&self, v: &Elem) -> Elem {
        let hits: Vec<(usize, &crate::scalar::Scalar)> = v.terms().iter().filter_map(|(i, c)| self.pivot_row.get(i).map(|&r| (r, c))).collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut acc = Acc::new();
        acc.add_scaled(v, &crate::scalar::Scalar::one());
        for (r, c) in hits {
            acc.add_scaled(&self.rows[r], &-c);
        }
        acc.finish()
    }

    pub fn contains(&self, v: &Elem) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &Elem) -> bool {
        let r = self.reduce(v);
        let Some(&(p, ref c)) = r.terms().last() else { return false };
        let r = r.scale(&c.inv());
        for row in self.rows.iter_mut() {
            let a = row.coeff(p);
            if !a.is_zero() {
                *row = row.sub(&r.scale(&a));
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Indices in `0..n` that are not pivots, ascending.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|i| !self.is_pivot(*i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn reduce_and_complement() {
        let mut e = Echelon::new();
        let v1 = Elem::from_pairs([(0, Scalar::one()), (2, Scalar::int(2))]);
        let v2 = Elem::from_pairs([(1, Scalar::one()), (2, Scalar::one())]);
        assert!(e.insert(&v1));
        assert!(e.insert(&v2));
        assert!(!e.insert(&v1.add(&v2)));
        assert_eq!(e.rank(), 2);
        let cmp = e.complement(3);
        assert_eq!(cmp.len(), 1);
        for row in e.rows() {
            assert!(e.contains(row));
        }
        let nf = e.reduce(&Elem::basis(2));
        assert!(nf.terms().iter().all(|(i, _)| cmp.contains(i)));
    }
}
