//! Finite-dimensional Hopf algebras by structure constants.

use super::double::DoubleData;
use super::echelon::Echelon;
use super::elem::{join_index, split_index, Acc, Elem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use std::sync::OnceLock;

/// Explicit structure tensors. `mult[i*n+j]` is `b_i b_j`, `comult[i]` is
/// `Δ(b_i)` with index `j*n+k` for `b_j⊗b_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub mult: Vec<Elem>,
    pub unit: Elem,
    pub comult: Vec<Elem>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Elem>,
}

pub(crate) enum Inner {
    Table(Table),
    Double(Box<DoubleData>),
}

pub struct FiniteHopf {
    name: String,
    labels: Vec<String>,
    pub(crate) inner: Inner,
    gens: OnceLock<Vec<Elem>>,
    antipode_inv: OnceLock<Option<Vec<Elem>>>,
}

impl Clone for FiniteHopf {
    fn clone(&self) -> Self {
        let inner = match &self.inner {
            Inner::Table(t) => Inner::Table(t.clone()),
            Inner::Double(d) => Inner::Double(Box::new((**d).clone())),
        };
        let gens = OnceLock::new();
        if let Some(g) = self.gens.get() {
            let _ = gens.set(g.clone());
        }
        let antipode_inv = OnceLock::new();
        if let Some(s) = self.antipode_inv.get() {
            let _ = antipode_inv.set(s.clone());
        }
        FiniteHopf { name: self.name.clone(), labels: self.labels.clone(), inner, gens, antipode_inv }
    }
}

impl std::fmt::Debug for FiniteHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteHopf({}, dim {})", self.name, self.dim())
    }
}

impl FiniteHopf {
    /// Wraps a table, checking tensor shapes. `gens`, when given, must generate
    /// the algebra; otherwise a generating set is searched for on demand.
    pub fn from_table(name: &str, labels: Vec<String>, table: Table, gens: Option<Vec<Elem>>) -> Result<Self> {
        let n = labels.len();
        let bad = |what: &str| Err(Error::Dimension(format!("{what} has wrong shape for dim {n}")));
        if table.mult.len() != n * n {
            return bad("mult");
        }
        if table.comult.len() != n || table.counit.len() != n || table.antipode.len() != n {
            return bad("coalgebra data");
        }
        let out_of_range = |e: &Elem, m: usize| e.max_index().is_some_and(|i| i >= m);
        if table.mult.iter().any(|e| out_of_range(e, n)) || out_of_range(&table.unit, n) {
            return bad("mult entries");
        }
        if table.comult.iter().any(|e| out_of_range(e, n * n)) || table.antipode.iter().any(|e| out_of_range(e, n)) {
            return bad("coalgebra entries");
        }
        let h = FiniteHopf { name: name.to_string(), labels, inner: Inner::Table(table), gens: OnceLock::new(), antipode_inv: OnceLock::new() };
        if let Some(g) = gens {
            let _ = h.gens.set(g);
        }
        Ok(h)
    }

    pub(crate) fn from_double(name: &str, labels: Vec<String>, d: DoubleData, gens: Vec<Elem>) -> Self {
        let h = FiniteHopf { name: name.to_string(), labels, inner: Inner::Double(Box::new(d)), gens: OnceLock::new(), antipode_inv: OnceLock::new() };
        let _ = h.gens.set(gens);
        h
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of a basis label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis element by label; panics if absent.
    pub fn b(&self, label: &str) -> Elem {
        Elem::basis(self.index_of(label).unwrap_or_else(|| panic!("no basis element {label} in {}", self.name)))
    }

    pub fn is_lazy(&self) -> bool {
        matches!(self.inner, Inner::Double(_))
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        match &self.inner {
            Inner::Table(t) => &t.mult[i * self.dim() + j],
            Inner::Double(d) => d.mul_basis(i, j),
        }
    }

    pub fn unit(&self) -> &Elem {
        match &self.inner {
            Inner::Table(t) => &t.unit,
            Inner::Double(d) => d.unit(),
        }
    }

    pub fn comult_basis(&self, i: usize) -> &Elem {
        match &self.inner {
            Inner::Table(t) => &t.comult[i],
            Inner::Double(d) => d.comult_basis(i),
        }
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        match &self.inner {
            Inner::Table(t) => t.counit[i].clone(),
            Inner::Double(d) => d.counit_basis(i),
        }
    }

    pub fn antipode_basis(&self, i: usize) -> &Elem {
        match &self.inner {
            Inner::Table(t) => &t.antipode[i],
            Inner::Double(d) => d.antipode_basis(i),
        }
    }

    /// `S^{-1}(b_i)`, or `None` if the antipode is singular.
    pub fn antipode_inv_basis(&self, i: usize) -> Option<&Elem> {
        match &self.inner {
            Inner::Double(d) => Some(d.antipode_inv_basis(i)),
            Inner::Table(t) => self
                .antipode_inv
                .get_or_init(|| {
                    let n = self.dim();
                    let m = Matrix::from_columns(&t.antipode.iter().map(|e| e.to_dense(n)).collect::<Vec<_>>());
                    let inv = m.inverse()?;
                    Some((0..n).map(|j| Elem::from_dense(&inv.column(j))).collect())
                })
                .as_ref()
                .map(|v| &v[i]),
        }
    }

    /// Supplies a known inverse antipode, e.g. pushed forward from a parent algebra.
    pub(crate) fn set_antipode_inv(&self, v: Vec<Elem>) {
        let _ = self.antipode_inv.set(Some(v));
    }

    /// A generating set of the algebra.
    pub fn generators(&self) -> &[Elem] {
        self.gens.get_or_init(|| find_generators(self))
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                acc.add_scaled(self.mul_basis(*i, *j), &(a * b));
            }
        }
        acc.finish()
    }

    pub fn comult(&self, x: &Elem) -> Elem {
        x.map_linear(|i| self.comult_basis(i).clone())
    }

    pub fn counit(&self, x: &Elem) -> Scalar {
        x.terms().iter().fold(Scalar::zero(), |acc, (i, c)| &acc + &(c * &self.counit_basis(*i)))
    }

    pub fn antipode(&self, x: &Elem) -> Elem {
        x.map_linear(|i| self.antipode_basis(i).clone())
    }

    pub fn antipode_inv(&self, x: &Elem) -> Option<Elem> {
        let mut acc = Acc::new();
        for (i, c) in x.terms() {
            acc.add_scaled(self.antipode_inv_basis(*i)?, c);
        }
        Some(acc.finish())
    }

    pub fn pow(&self, x: &Elem, k: u32) -> Elem {
        let mut acc = self.unit().clone();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn commutator(&self, x: &Elem, y: &Elem) -> Elem {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    /// Product in `H^{⊗k}`.
    pub fn tensor_mul(&self, k: usize, x: &Elem, y: &Elem) -> Elem {
        let n = self.dim();
        let mut acc = Acc::new();
        for (i, a) in x.terms() {
            let pi = split_index(*i, n, k);
            for (j, b) in y.terms() {
                let pj = split_index(*j, n, k);
                let factors: Vec<&Elem> = (0..k).map(|s| self.mul_basis(pi[s], pj[s])).collect();
                acc.add_scaled(&outer(&factors, n), &(a * b));
            }
        }
        acc.finish()
    }

    /// `1^{⊗k}`.
    pub fn tensor_unit(&self, k: usize) -> Elem {
        let u = self.unit();
        outer(&vec![u; k], self.dim())
    }

    /// Pure tensor of elements.
    pub fn tensor(&self, factors: &[&Elem]) -> Elem {
        outer(factors, self.dim())
    }

    /// Replaces slot `slot` of a `k`-fold tensor by `f(b)`, an element of `H^{⊗m}`.
    pub fn map_slot(&self, x: &Elem, k: usize, slot: usize, m: usize, f: impl Fn(usize) -> Elem) -> Elem {
        let n = self.dim();
        let tail = n.pow((k - slot - 1) as u32);
        let mid = n.pow(m as u32);
        let mut acc = Acc::new();
        for (i, c) in x.terms() {
            let head = i / (tail * n);
            let b = (i / tail) % n;
            let rest = i % tail;
            for (j, d) in f(b).terms() {
                acc.add((head * mid + j) * tail + rest, &(c * d));
            }
        }
        acc.finish()
    }

    /// Permutes tensor factors: output slot `s` holds input slot `perm[s]`.
    pub fn permute(&self, x: &Elem, k: usize, perm: &[usize]) -> Elem {
        let n = self.dim();
        x.reindex(|i| {
            let p = split_index(i, n, k);
            join_index(&perm.iter().map(|&s| p[s]).collect::<Vec<_>>(), n)
        })
    }

    /// Inserts `1` into a `k`-fold tensor at position `slot` (giving `k+1` factors).
    pub fn insert_unit(&self, x: &Elem, k: usize, slot: usize) -> Elem {
        let n = self.dim();
        let u = self.unit().clone();
        let mut acc = Acc::new();
        for (i, c) in x.terms() {
            let p = split_index(*i, n, k);
            for (j, d) in u.terms() {
                let mut q = p.clone();
                q.insert(slot, *j);
                acc.add(join_index(&q, n), &(c * d));
            }
        }
        acc.finish()
    }

    /// Materializes all structure tensors.
    pub fn to_table(&self) -> Table {
        if let Inner::Table(t) = &self.inner {
            return t.clone();
        }
        let n = self.dim();
        Table {
            mult: (0..n * n).map(|k| self.mul_basis(k / n, k % n).clone()).collect(),
            unit: self.unit().clone(),
            comult: (0..n).map(|i| self.comult_basis(i).clone()).collect(),
            counit: (0..n).map(|i| self.counit_basis(i)).collect(),
            antipode: (0..n).map(|i| self.antipode_basis(i).clone()).collect(),
        }
    }

    /// Same algebra with an explicit table.
    pub fn materialize(&self) -> FiniteHopf {
        let t = self.to_table();
        let h = FiniteHopf::from_table(&self.name, self.labels.clone(), t, Some(self.generators().to_vec())).expect("shapes are consistent");
        if let Some(v) = (0..self.dim()).map(|i| self.antipode_inv_basis(i).cloned()).collect::<Option<Vec<_>>>() {
            h.set_antipode_inv(v);
        }
        h
    }

    pub fn same_structure(&self, o: &FiniteHopf) -> bool {
        self.dim() == o.dim() && self.to_table() == o.to_table()
    }

    /// Whether `x` is central, tested against the generators.
    pub fn is_central(&self, x: &Elem) -> bool {
        self.generators().iter().all(|g| self.commutator(x, g).is_zero())
    }

    pub fn is_commutative(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|a| gens.iter().all(|b| self.commutator(a, b).is_zero()))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let d = self.comult_basis(i);
            *d == self.permute(d, 2, &[1, 0])
        })
    }

    pub fn is_grouplike(&self, x: &Elem) -> bool {
        !x.is_zero() && self.comult(x) == self.tensor(&[x, x])
    }

    /// Display of an element using basis labels.
    pub fn show(&self, x: &Elem) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .iter()
            .map(|(i, c)| if c.is_one() { self.labels[*i].clone() } else { format!("({c})*{}", self.labels[*i]) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Outer product of elements of `H`, as an element of `H^{⊗k}`.
pub fn outer(factors: &[&Elem], n: usize) -> Elem {
    let mut cur: Vec<(usize, Scalar)> = vec![(0, Scalar::one())];
    for f in factors {
        let mut next = Vec::with_capacity(cur.len() * f.len());
        for (i, a) in &cur {
            for (j, b) in f.terms() {
                next.push((i * n + j, a * b));
            }
        }
        cur = next;
    }
    Elem::from_pairs(cur)
}

/// Greedy search: add the first basis vector outside the generated subalgebra.
fn find_generators(h: &FiniteHopf) -> Vec<Elem> {
    let n = h.dim();
    let mut gens: Vec<Elem> = Vec::new();
    loop {
        let span = subalgebra_span(h, &gens);
        if span.rank() == n {
            return gens;
        }
        let next = (0..n).find(|&i| !span.reduce(&Elem::basis(i)).is_zero()).expect("rank < n");
        gens.push(Elem::basis(next));
    }
}

/// Span of all words in `gens`, computed by right multiplication from `1`.
pub fn subalgebra_span(h: &FiniteHopf, gens: &[Elem]) -> Echelon {
    let mut span = Echelon::new();
    let mut queue = vec![h.unit().clone()];
    span.insert(h.unit());
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = h.mul(&v, g);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    span
}

/// Labels for a basis of words `g^i x^j` style: drops zero exponents.
pub(crate) fn word_label(parts: &[(&str, usize)]) -> String {
    let s: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("")
    }
}
