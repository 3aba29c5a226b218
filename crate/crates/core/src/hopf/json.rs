//! JSON form of a finite Hopf algebra: dense nested arrays of canonical
//! scalar strings.

use super::data::{FiniteHopf, Table};
use super::elem::Elem;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// `mult[i][j][k]` is the coefficient of `b_k` in `b_i b_j`, `comult[i][j][k]`
/// of `b_j⊗b_k` in `Δ(b_i)`, `antipode[i][j]` of `b_j` in `S(b_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub comult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

fn strings(e: &Elem, n: usize) -> Vec<String> {
    e.to_dense(n).iter().map(Scalar::canonical).collect()
}

fn parse_vec(v: &[String], n: usize, what: &str) -> Result<Elem> {
    if v.len() != n {
        return Err(Error::Dimension(format!("{what}: expected {n} entries, got {}", v.len())));
    }
    let dense = v.iter().map(|s| Scalar::parse(s)).collect::<Result<Vec<_>>>()?;
    Ok(Elem::from_dense(&dense))
}

fn parse_square(v: &[Vec<String>], n: usize, what: &str) -> Result<Elem> {
    if v.len() != n {
        return Err(Error::Dimension(format!("{what}: expected {n} rows, got {}", v.len())));
    }
    let mut out = Elem::zero();
    for (j, row) in v.iter().enumerate() {
        out = out.add(&parse_vec(row, n, what)?.reindex(|k| j * n + k));
    }
    Ok(out)
}

pub fn to_json(h: &FiniteHopf) -> HopfJson {
    let n = h.dim();
    let square = |e: &Elem| (0..n).map(|j| (0..n).map(|k| e.coeff(j * n + k).canonical()).collect()).collect();
    HopfJson {
        name: Some(h.name().to_string()),
        dim: n,
        basis: h.labels().to_vec(),
        mult: (0..n).map(|i| (0..n).map(|j| strings(h.mul_basis(i, j), n)).collect()).collect(),
        unit: strings(h.unit(), n),
        comult: (0..n).map(|i| square(h.comult_basis(i))).collect(),
        counit: (0..n).map(|i| h.counit_basis(i).canonical()).collect(),
        antipode: (0..n).map(|i| strings(h.antipode_basis(i), n)).collect(),
    }
}

pub fn from_json(j: &HopfJson) -> Result<FiniteHopf> {
    let n = j.dim;
    if j.basis.len() != n {
        return Err(Error::Dimension(format!("basis has {} labels for dim {n}", j.basis.len())));
    }
    if j.mult.len() != n || j.comult.len() != n || j.antipode.len() != n {
        return Err(Error::Dimension(format!("mult/comult/antipode need {n} rows")));
    }
    let mut mult = Vec::with_capacity(n * n);
    for (i, rows) in j.mult.iter().enumerate() {
        if rows.len() != n {
            return Err(Error::Dimension(format!("mult[{i}] has {} rows", rows.len())));
        }
        for (k, r) in rows.iter().enumerate() {
            mult.push(parse_vec(r, n, &format!("mult[{i}][{k}]"))?);
        }
    }
    let table = Table {
        mult,
        unit: parse_vec(&j.unit, n, "unit")?,
        comult: j.comult.iter().enumerate().map(|(i, c)| parse_square(c, n, &format!("comult[{i}]"))).collect::<Result<_>>()?,
        counit: parse_vec(&j.counit, n, "counit")?.to_dense(n),
        antipode: j.antipode.iter().enumerate().map(|(i, r)| parse_vec(r, n, &format!("antipode[{i}]"))).collect::<Result<_>>()?,
    };
    FiniteHopf::from_table(j.name.as_deref().unwrap_or("H"), j.basis.clone(), table, None)
}

impl FiniteHopf {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&to_json(self)).expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<FiniteHopf> {
        let j: HopfJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        from_json(&j)
    }
}
