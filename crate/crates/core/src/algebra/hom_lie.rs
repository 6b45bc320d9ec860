use std::collections::BTreeMap;

use super::space::{Parity, SuperSpace};
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

/// A finite-dimensional Hom-Lie superalgebra given by structure constants.
///
/// Only brackets `[b_i, b_j]` with `i <= j` are stored; the others follow from graded
/// skew-symmetry `[b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j]`. The twist is an even
/// endomorphism acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieSuperalgebra {
    field: Field,
    space: SuperSpace,
    brackets: BTreeMap<(usize, usize), Vec<Scalar>>,
    twist: Matrix,
}

impl HomLieSuperalgebra {
    /// Validated construction: indices in range with `i <= j`, results respect parity,
    /// and the twist is even.
    pub fn new(
        field: Field,
        space: SuperSpace,
        twist: Matrix,
        brackets: BTreeMap<(usize, usize), Vec<Scalar>>,
    ) -> Result<Self> {
        let n = space.dim();
        if twist.rows() != n || twist.cols() != n {
            return Err(Error::InvalidAlgebra(format!("twist is {}x{}, expected {n}x{n}", twist.rows(), twist.cols())));
        }
        if twist.field() != field {
            return Err(Error::FieldMismatch(twist.field(), field));
        }
        for r in 0..n {
            for c in 0..n {
                if space.parity(r) != space.parity(c) && !twist.get(r, c).is_zero() {
                    return Err(Error::InvalidAlgebra(format!("twist entry ({r}, {c}) mixes parities")));
                }
            }
        }
        let mut stored = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i > j {
                return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) must be given with i <= j")));
            }
            if j >= n {
                return Err(Error::InvalidAlgebra(format!("bracket index {j} out of range for dimension {n}")));
            }
            if v.len() != n {
                return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) has {} coordinates", v.len())));
            }
            if let Some(s) = v.iter().find(|s| s.field() != field) {
                return Err(Error::FieldMismatch(s.field(), field));
            }
            let expected = space.parity(i) + space.parity(j);
            if let Some(k) = (0..n).find(|&k| !v[k].is_zero() && space.parity(k) != expected) {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({i}, {j}) has a component on {k} of the wrong parity"
                )));
            }
            if !vector::is_zero(&v) {
                stored.insert((i, j), v);
            }
        }
        Ok(HomLieSuperalgebra { field, space, brackets: stored, twist })
    }

    /// Abelian algebra of dimension `(p|q)`; identity twist unless one is given.
    pub fn abelian(field: Field, even_dim: usize, odd_dim: usize, twist: Option<Matrix>) -> Result<Self> {
        let n = even_dim + odd_dim;
        let twist = twist.unwrap_or_else(|| Matrix::identity(field, n));
        Self::new(field, SuperSpace::new(even_dim, odd_dim), twist, BTreeMap::new())
    }

    pub fn builder(field: Field, even_dim: usize, odd_dim: usize) -> AlgebraBuilder {
        AlgebraBuilder { field, even_dim, odd_dim, names: None, twist: None, brackets: BTreeMap::new() }
    }

    /// Stores a bracket entry bypassing every load-time check, including `i <= j`.
    /// Meant for exercising the validators on malformed data.
    pub fn with_raw_bracket(mut self, i: usize, j: usize, value: Vec<Scalar>) -> Self {
        assert_eq!(value.len(), self.dim(), "raw bracket length");
        self.brackets.insert((i, j), value);
        self
    }

    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        Self::new(self.field, self.space.clone(), twist, self.brackets.clone())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        self.space = SuperSpace::with_names(self.space.even_dim(), self.space.odd_dim(), names)?;
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn dims(&self) -> (usize, usize) {
        self.space.dims()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// Stored structure constants, keyed by `(i, j)`.
    pub fn stored_brackets(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.brackets
    }

    /// `[b_i, b_j]`, deriving unstored `i > j` entries by graded skew-symmetry.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        if let Some(v) = self.brackets.get(&(i, j)) {
            return v.clone();
        }
        if i > j {
            if let Some(v) = self.brackets.get(&(j, i)) {
                let negative = !Parity::sign_negative(self.parity(i), self.parity(j));
                return vector::scale(&Scalar::sign(self.field, negative), v);
            }
        }
        vector::zeros(self.field, self.dim())
    }

    /// Bilinear extension of the structure constants; inputs need not be homogeneous.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vector::zeros(self.field, self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let b = self.basis_bracket(i, j);
                if !vector::is_zero(&b) {
                    vector::axpy(&mut acc, &(xi * yj), &b);
                }
            }
        }
        acc
    }

    pub fn apply_twist(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.twist.mul_vec(v).expect("vector in the algebra")
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim(), i)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.values().all(|v| vector::is_zero(v))
    }
}

/// Convenience builder for algebras written down by hand.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    field: Field,
    even_dim: usize,
    odd_dim: usize,
    names: Option<Vec<String>>,
    twist: Option<Matrix>,
    brackets: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl AlgebraBuilder {
    pub fn names(mut self, names: &[&str]) -> Self {
        self.names = Some(names.iter().map(|s| s.to_string()).collect());
        self
    }

    /// Sets `[b_i, b_j] = sum c_k b_k` from integer coefficients.
    pub fn bracket(self, i: usize, j: usize, terms: &[(usize, i64)]) -> Self {
        let f = self.field;
        self.bracket_scalars(i, j, terms.iter().map(|&(k, c)| (k, f.from_i64(c))).collect())
    }

    pub fn bracket_scalars(mut self, i: usize, j: usize, terms: Vec<(usize, Scalar)>) -> Self {
        let n = self.even_dim + self.odd_dim;
        let mut v = vector::zeros(self.field, n);
        for (k, c) in terms {
            v[k] = &v[k] + &c;
        }
        self.brackets.insert((i, j), v);
        self
    }

    pub fn twist(mut self, twist: Matrix) -> Self {
        self.twist = Some(twist);
        self
    }

    pub fn twist_diagonal(self, diag: &[i64]) -> Self {
        let f = self.field;
        let d: Vec<Scalar> = diag.iter().map(|&x| f.from_i64(x)).collect();
        self.twist(Matrix::diagonal(f, &d))
    }

    pub fn build(self) -> Result<HomLieSuperalgebra> {
        let n = self.even_dim + self.odd_dim;
        let space = match self.names {
            Some(names) => SuperSpace::with_names(self.even_dim, self.odd_dim, names)?,
            None => SuperSpace::new(self.even_dim, self.odd_dim),
        };
        let twist = self.twist.unwrap_or_else(|| Matrix::identity(self.field, n));
        HomLieSuperalgebra::new(self.field, space, twist, self.brackets)
    }
}
