//! JSON file formats for algebras, factor sets and isoclinism witnesses.
//!
//! Scalars are strings (`"3"`, `"-1/2"`), brackets and factor-set values are sparse lists
//! of `{i, j, result}` with `i <= j` and `result` mapping a basis index to a coefficient.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{EvenLinearMap, GradedSubspace, HomLieSuperalgebra, SuperSpace};
use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::isoclinism::{Frame, IsoclinismWitness, DERIVED_CONVENTION, QUOTIENT_CONVENTION};
use crate::linalg::{vector, Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseEntry {
    pub i: usize,
    pub j: usize,
    pub result: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub even_dim: usize,
    pub odd_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub theta: Vec<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<SparseEntry>,
}

/// `Z(G)` as seen by a factor set: a superspace with a twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterFile {
    pub even_dim: usize,
    pub odd_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub theta: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSetFile {
    pub name: String,
    pub field: String,
    pub quotient: AlgebraFile,
    pub center: CenterFile,
    #[serde(default)]
    pub coeffs: Vec<SparseEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub quotient_convention: String,
    pub derived_convention: String,
    pub mu: MatrixFile,
    pub nu: MatrixFile,
}

fn parse_field(s: &str, forced: Option<Field>) -> Result<Field> {
    let declared: Field = s.parse()?;
    Ok(forced.unwrap_or(declared))
}

fn check_square(rows: &[Vec<String>], n: usize, what: &str) -> Result<()> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Format(format!("{what} must be a {n}x{n} matrix")));
    }
    Ok(())
}

fn parse_sparse(
    field: Field,
    entries: &[SparseEntry],
    pair_bound: usize,
    len: usize,
    what: &str,
) -> Result<BTreeMap<(usize, usize), Vec<Scalar>>> {
    let mut out = BTreeMap::new();
    for e in entries {
        if e.i > e.j {
            return Err(Error::Format(format!("{what} ({}, {}) must be given with i <= j", e.i, e.j)));
        }
        if e.j >= pair_bound {
            return Err(Error::Format(format!("{what} index {} out of range", e.j)));
        }
        let mut v = vector::zeros(field, len);
        for (&k, s) in &e.result {
            if k >= len {
                return Err(Error::Format(format!("{what} ({}, {}) has result index {k} out of range", e.i, e.j)));
            }
            v[k] = field.parse(s)?;
        }
        if out.insert((e.i, e.j), v).is_some() {
            return Err(Error::Format(format!("duplicate {what} ({}, {})", e.i, e.j)));
        }
    }
    Ok(out)
}

fn sparse_entries(map: &BTreeMap<(usize, usize), Vec<Scalar>>) -> Vec<SparseEntry> {
    map.iter()
        .filter(|(_, v)| !vector::is_zero(v))
        .map(|(&(i, j), v)| SparseEntry {
            i,
            j,
            result: v.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(k, s)| (k, s.to_string())).collect(),
        })
        .collect()
}

fn space(even: usize, odd: usize, names: &Option<Vec<String>>) -> Result<SuperSpace> {
    match names {
        Some(n) => SuperSpace::with_names(even, odd, n.clone()),
        None => Ok(SuperSpace::new(even, odd)),
    }
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<AlgebraFile> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// Loads the algebra; `forced` overrides the declared field (rationals are reduced mod p).
    pub fn to_algebra(&self, forced: Option<Field>) -> Result<HomLieSuperalgebra> {
        let field = parse_field(&self.field, forced)?;
        let n = self.even_dim + self.odd_dim;
        check_square(&self.theta, n, "theta")?;
        let theta = Matrix::parse(field, n, n, &self.theta)?;
        let brackets = parse_sparse(field, &self.brackets, n, n, "bracket")?;
        let space = space(self.even_dim, self.odd_dim, &self.basis_names)?;
        HomLieSuperalgebra::new(field, space, theta, brackets)
    }

    pub fn from_algebra(name: &str, g: &HomLieSuperalgebra) -> AlgebraFile {
        AlgebraFile {
            name: name.to_string(),
            field: g.field().to_string(),
            even_dim: g.dims().0,
            odd_dim: g.dims().1,
            basis_names: Some(g.space().names().to_vec()),
            theta: g.twist().to_strings(),
            brackets: sparse_entries(g.stored_brackets()),
        }
    }
}

impl FactorSetFile {
    pub fn from_json(text: &str) -> Result<FactorSetFile> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_factor_set(&self, forced: Option<Field>) -> Result<FactorSet> {
        let field = parse_field(&self.field, forced)?;
        let quotient = self.quotient.to_algebra(Some(field))?;
        let k = self.center.even_dim + self.center.odd_dim;
        check_square(&self.center.theta, k, "center theta")?;
        let theta = Matrix::parse(field, k, k, &self.center.theta)?;
        let center = space(self.center.even_dim, self.center.odd_dim, &self.center.basis_names)?;
        let coeffs = parse_sparse(field, &self.coeffs, quotient.dim(), k, "factor set entry")?;
        FactorSet::new(quotient, center, theta, coeffs)
    }

    pub fn from_factor_set(name: &str, fs: &FactorSet) -> FactorSetFile {
        let c = fs.center_space();
        FactorSetFile {
            name: name.to_string(),
            field: fs.field().to_string(),
            quotient: AlgebraFile::from_algebra(&format!("{name}/quotient"), fs.quotient()),
            center: CenterFile {
                even_dim: c.even_dim(),
                odd_dim: c.odd_dim(),
                basis_names: Some(c.names().to_vec()),
                theta: fs.center_twist().to_strings(),
            },
            coeffs: sparse_entries(fs.coeffs()),
        }
    }
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> MatrixFile {
        MatrixFile { rows: m.rows(), cols: m.cols(), entries: m.to_strings() }
    }

    pub fn to_matrix(&self, field: Field) -> Result<Matrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Format(format!("matrix entries do not match its {}x{} shape", self.rows, self.cols)));
        }
        Matrix::parse(field, self.rows, self.cols, &self.entries)
    }
}

impl WitnessFile {
    pub fn from_json(text: &str) -> Result<WitnessFile> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_witness(w: &IsoclinismWitness) -> WitnessFile {
        WitnessFile {
            quotient_convention: QUOTIENT_CONVENTION.to_string(),
            derived_convention: DERIVED_CONVENTION.to_string(),
            mu: MatrixFile::from_matrix(w.mu.matrix()),
            nu: MatrixFile::from_matrix(w.nu.matrix()),
        }
    }

    /// Reads the witness against the canonical frames of `g1` and `g2`.
    pub fn to_witness(&self, g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra) -> Result<IsoclinismWitness> {
        if self.quotient_convention != QUOTIENT_CONVENTION || self.derived_convention != DERIVED_CONVENTION {
            return Err(Error::Format(format!(
                "unsupported witness conventions ({}, {})",
                self.quotient_convention, self.derived_convention
            )));
        }
        let (f1, f2) = (Frame::new(g1)?, Frame::new(g2)?);
        let field = g1.field();
        let mu = EvenLinearMap::new(
            f1.quotient_algebra().space().clone(),
            f2.quotient_algebra().space().clone(),
            self.mu.to_matrix(field)?,
        )?;
        let nu = EvenLinearMap::new(
            f1.derived_algebra.space().clone(),
            f2.derived_algebra.space().clone(),
            self.nu.to_matrix(field)?,
        )?;
        Ok(IsoclinismWitness { mu, nu })
    }
}

/// Parses a spanning set: basis names separated by `,` or `;` (`"z,c"`), or coefficient
/// vectors in brackets separated by `;` (`"[1, 0, 0]; [0, 1, 0]"`). Vectors must be homogeneous.
pub fn parse_subspace(g: &HomLieSuperalgebra, spec: &str) -> Result<GradedSubspace> {
    let f = g.field();
    let spec = spec.trim();
    let mut vectors = Vec::new();
    if spec.contains('[') {
        for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let inner = item
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Format(format!("expected a bracketed vector, got {item:?}")))?;
            let v = inner.split(',').map(|s| f.parse(s.trim())).collect::<Result<Vec<_>>>()?;
            if v.len() != g.dim() {
                return Err(Error::Format(format!("vector {item} has {} entries, expected {}", v.len(), g.dim())));
            }
            vectors.push(v);
        }
    } else {
        let mut seen = BTreeSet::new();
        for name in spec.split([',', ';']).map(str::trim).filter(|s| !s.is_empty()) {
            let i = g.space().index_of(name).ok_or_else(|| Error::Format(format!("unknown basis vector {name:?}")))?;
            if seen.insert(i) {
                vectors.push(g.unit(i));
            }
        }
    }
    g.graded_subspace(&vectors).map_err(|e| Error::Format(e.to_string()))
}

/// Basis vectors of a subspace as strings.
pub fn subspace_strings(s: &GradedSubspace) -> Vec<Vec<String>> {
    s.basis_vectors().iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
}
