//! Finite-dimensional representations given by generator matrices, shared by
//! U_q(sl2) and U_q(affine sl2).

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Presentation {
    Uqsl2,
    AffineSl2,
}

/// One node `i` carries `e_i, f_i, K_i, K_i^{-1}` with
/// `Δe = e⊗K + 1⊗e`, `Δf = f⊗1 + K⁻¹⊗f`, `S(e) = −eK⁻¹`, `S(f) = −Kf`.
struct Node {
    e: &'static str,
    f: &'static str,
    k: &'static str,
    kinv: &'static str,
}

const UQ: [Node; 1] = [Node { e: "e", f: "f", k: "K", kinv: "Kinv" }];
const AFF: [Node; 2] = [Node { e: "e0", f: "f0", k: "K0", kinv: "K0inv" }, Node { e: "e1", f: "f1", k: "K1", kinv: "K1inv" }];

impl Presentation {
    fn nodes(&self) -> &'static [Node] {
        match self {
            Presentation::Uqsl2 => &UQ,
            Presentation::AffineSl2 => &AFF,
        }
    }

    pub fn generators(&self) -> Vec<&'static str> {
        self.nodes().iter().flat_map(|n| [n.e, n.f, n.k, n.kinv]).collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Presentation::Uqsl2 => "uqsl2",
            Presentation::AffineSl2 => "affine_sl2",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub presentation: Presentation,
    /// The deformation parameter the matrices are written in.
    pub q: Scalar,
    pub dim: usize,
    pub mats: BTreeMap<String, Matrix>,
    /// Set for truncated infinite-dimensional modules: some generator maps
    /// the last basis vector outside the span.
    pub truncated: bool,
}

impl Representation {
    pub fn new(presentation: Presentation, q: Scalar, mats: BTreeMap<String, Matrix>) -> Result<Self> {
        let mut dim = None;
        for g in presentation.generators() {
            let m = mats.get(g).ok_or_else(|| Error::Dimension(format!("missing generator {g}")))?;
            m.check_square(g)?;
            match dim {
                None => dim = Some(m.rows()),
                Some(d) if d != m.rows() => return Err(Error::Dimension(format!("{g} is {}x{}, expected {d}", m.rows(), m.rows()))),
                _ => {}
            }
        }
        Ok(Representation { presentation, q, dim: dim.unwrap_or(0), mats, truncated: false })
    }

    pub fn get(&self, g: &str) -> &Matrix {
        &self.mats[g]
    }

    pub fn trivial(presentation: Presentation, q: Scalar) -> Self {
        let mut mats = BTreeMap::new();
        for n in presentation.nodes() {
            mats.insert(n.e.to_string(), Matrix::zeros(1, 1));
            mats.insert(n.f.to_string(), Matrix::zeros(1, 1));
            mats.insert(n.k.to_string(), Matrix::identity(1));
            mats.insert(n.kinv.to_string(), Matrix::identity(1));
        }
        Representation { presentation, q, dim: 1, mats, truncated: false }
    }

    fn compatible(&self, o: &Representation) -> Result<()> {
        if self.presentation != o.presentation {
            return Err(Error::Domain(format!("presentation mismatch: {} vs {}", self.presentation.name(), o.presentation.name())));
        }
        if self.q != o.q {
            return Err(Error::Domain(format!("deformation parameters differ: {} vs {}", self.q, o.q)));
        }
        Ok(())
    }

    /// `π_{X⊗Y}(a) = (π_X ⊗ π_Y)Δ(a)`.
    pub fn tensor(&self, o: &Representation) -> Result<Representation> {
        self.compatible(o)?;
        let (ix, iy) = (Matrix::identity(self.dim), Matrix::identity(o.dim));
        let mut mats = BTreeMap::new();
        for n in self.presentation.nodes() {
            let g = |r: &Representation, l: &str| r.get(l).clone();
            mats.insert(n.e.to_string(), g(self, n.e).kron(&g(o, n.k)).add(&ix.kron(&g(o, n.e))));
            mats.insert(n.f.to_string(), g(self, n.f).kron(&iy).add(&g(self, n.kinv).kron(&g(o, n.f))));
            mats.insert(n.k.to_string(), g(self, n.k).kron(&g(o, n.k)));
            mats.insert(n.kinv.to_string(), g(self, n.kinv).kron(&g(o, n.kinv)));
        }
        Ok(Representation { presentation: self.presentation, q: self.q.clone(), dim: self.dim * o.dim, mats, truncated: self.truncated || o.truncated })
    }

    /// Left dual `π_{X*}(a) = π_X(S(a))ᵀ`.
    pub fn dual(&self) -> Representation {
        let mut mats = BTreeMap::new();
        for n in self.presentation.nodes() {
            let (e, f, k, ki) = (self.get(n.e), self.get(n.f), self.get(n.k), self.get(n.kinv));
            mats.insert(n.e.to_string(), e.mul(ki).neg().transpose());
            mats.insert(n.f.to_string(), k.mul(f).neg().transpose());
            mats.insert(n.k.to_string(), ki.transpose());
            mats.insert(n.kinv.to_string(), k.transpose());
        }
        Representation { presentation: self.presentation, q: self.q.clone(), dim: self.dim, mats, truncated: self.truncated }
    }

    /// Conjugate every generator by an invertible `p`: `p⁻¹ π(a) p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let pinv = p.inverse().ok_or_else(|| Error::NotInvertible("change of basis".into()))?;
        let mats = self.mats.iter().map(|(k, m)| (k.clone(), pinv.mul(m).mul(p))).collect();
        Ok(Representation { mats, ..self.clone() })
    }

    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Representation> {
        let mut mats = BTreeMap::new();
        for (k, m) in &self.mats {
            mats.insert(k.clone(), m.try_map(&f)?);
        }
        Ok(Representation { mats, q: f(&self.q)?, ..self.clone() })
    }

    /// Whether `φ π_X(a) = π_Y(a) φ` for every generator, where `φ: X → Y`.
    pub fn is_intertwiner(&self, phi: &Matrix, y: &Representation) -> bool {
        self.presentation.generators().iter().all(|g| phi.mul(self.get(g)) == y.get(g).mul(phi))
    }

    /// Basis of `Hom(X, Y)` as matrices `dim Y × dim X`.
    pub fn intertwiners(&self, y: &Representation) -> Result<Vec<Matrix>> {
        self.compatible(y)?;
        let (dx, dy) = (self.dim, y.dim);
        let gens = self.presentation.generators();
        let mut cols = Vec::with_capacity(dx * dy);
        for i in 0..dy {
            for j in 0..dx {
                let mut unit = Matrix::zeros(dy, dx);
                unit[(i, j)] = Scalar::one();
                let mut col = Vec::with_capacity(gens.len() * dx * dy);
                for g in &gens {
                    col.extend(unit.mul(self.get(g)).sub(&y.get(g).mul(&unit)).entries().iter().cloned());
                }
                cols.push(col);
            }
        }
        let sys = Matrix::from_columns(&cols);
        Ok(sys
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut m = Matrix::zeros(dy, dx);
                for i in 0..dy {
                    for j in 0..dx {
                        m[(i, j)] = v[i * dx + j].clone();
                    }
                }
                m
            })
            .collect())
    }

    /// Common kernel of the given operators.
    pub fn joint_kernel(&self, ops: &[Matrix]) -> Vec<Vec<Scalar>> {
        if ops.is_empty() {
            return (0..self.dim).map(|i| (0..self.dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
        }
        Matrix::vstack(ops).nullspace()
    }
}

/// `P: V⊗W → W⊗V`.
pub fn flip(dv: usize, dw: usize) -> Matrix {
    Matrix::swap(dv, dw)
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    presentation: Presentation,
    dim: usize,
    field: String,
    q: String,
    #[serde(default)]
    truncated: bool,
    matrices: BTreeMap<String, Vec<Vec<String>>>,
}

impl Representation {
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut names: Vec<&str> = self.mats.values().flat_map(|m| m.entries().iter()).chain([&self.q]).flat_map(|s| s.vars()).map(|v| v.name()).collect();
        names.sort();
        names.dedup();
        let field = if names.is_empty() { "Q".to_string() } else { format!("Q({})", names.join(",")) };
        let rj = RepJson {
            presentation: self.presentation,
            dim: self.dim,
            field,
            q: self.q.canonical(),
            truncated: self.truncated,
            matrices: self.mats.iter().map(|(k, m)| (k.clone(), m.to_rows().iter().map(|r| r.iter().map(Scalar::canonical).collect()).collect())).collect(),
        };
        serde_json::to_value(rj).expect("plain data serializes")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Representation> {
        let rj: RepJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut mats = BTreeMap::new();
        for (k, rows) in rj.matrices {
            let rows = rows.iter().map(|r| r.iter().map(|s| Scalar::parse(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err(Error::Dimension(format!("generator {k} is not square")));
            }
            mats.insert(k, Matrix::from_rows(rows));
        }
        let mut r = Representation::new(rj.presentation, Scalar::parse(&rj.q)?, mats)?;
        if r.dim != rj.dim {
            return Err(Error::Dimension(format!("declared dim {} but matrices are {}", rj.dim, r.dim)));
        }
        r.truncated = rj.truncated;
        Ok(r)
    }
}
