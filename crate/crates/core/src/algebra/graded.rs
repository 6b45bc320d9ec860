//! Parity-homogeneous subspaces and direct-sum splittings of a superspace.

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar, Subspace};

/// A graded subspace `K = K_0 ⊕ K_1`, each part in local coordinates of the
/// corresponding block of the ambient superspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    even: Subspace,
    odd: Subspace,
}

impl GradedSubspace {
    pub fn new(even: Subspace, odd: Subspace) -> Result<Self> {
        if even.field() != odd.field() {
            return Err(Error::FieldMismatch(even.field(), odd.field()));
        }
        Ok(GradedSubspace { even, odd })
    }

    pub fn zero(field: Field, even_dim: usize, odd_dim: usize) -> Self {
        GradedSubspace { even: Subspace::zero(field, even_dim), odd: Subspace::zero(field, odd_dim) }
    }

    pub fn full(field: Field, even_dim: usize, odd_dim: usize) -> Self {
        GradedSubspace { even: Subspace::full(field, even_dim), odd: Subspace::full(field, odd_dim) }
    }

    /// Span of homogeneous vectors; mixed-parity vectors are rejected.
    pub fn from_homogeneous(field: Field, even_dim: usize, odd_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        for v in vectors {
            if v.len() != even_dim + odd_dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in a ({even_dim}|{odd_dim}) space",
                    v.len()
                )));
            }
            let even = v[..even_dim].iter().any(|x| !x.is_zero());
            let odd = v[even_dim..].iter().any(|x| !x.is_zero());
            if even && odd {
                return Err(Error::Precondition(format!("vector {} is not homogeneous", vector::format(v))));
            }
        }
        Self::span_components(field, even_dim, odd_dim, vectors)
    }

    /// Smallest graded subspace containing the vectors: spans their homogeneous components.
    pub fn span_components(field: Field, even_dim: usize, odd_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let evens: Vec<Vec<Scalar>> = vectors.iter().map(|v| v[..even_dim].to_vec()).collect();
        let odds: Vec<Vec<Scalar>> = vectors.iter().map(|v| v[even_dim..].to_vec()).collect();
        Ok(GradedSubspace {
            even: Subspace::from_vectors(field, even_dim, &evens)?,
            odd: Subspace::from_vectors(field, odd_dim, &odds)?,
        })
    }

    pub fn field(&self) -> Field {
        self.even.field()
    }

    pub fn even(&self) -> &Subspace {
        &self.even
    }

    pub fn odd(&self) -> &Subspace {
        &self.odd
    }

    pub fn ambient_dims(&self) -> (usize, usize) {
        (self.even.ambient_dim(), self.odd.ambient_dim())
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.dim(), self.odd.dim())
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis in full ambient coordinates: even RREF rows first, then odd.
    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        let (p, q) = self.ambient_dims();
        let f = self.field();
        let mut out = Vec::with_capacity(self.dim());
        for row in self.even.basis_vectors() {
            let mut v = row;
            v.extend(vector::zeros(f, q));
            out.push(v);
        }
        for row in self.odd.basis_vectors() {
            let mut v = vector::zeros(f, p);
            v.extend(row);
            out.push(v);
        }
        out
    }

    /// `n x dim` matrix whose columns are the basis vectors.
    pub fn embedding(&self) -> Matrix {
        let (p, q) = self.ambient_dims();
        Matrix::from_columns(self.field(), p + q, &self.basis_vectors())
    }

    /// Coordinates in the graded basis (even coordinates, then odd).
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let p = self.even.ambient_dim();
        let mut c = self.even.coordinates(&v[..p])?;
        c.extend(self.odd.coordinates(&v[p..])?);
        Some(c)
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let de = self.even.dim();
        let mut v = self.even.combine(&coords[..de]);
        v.extend(self.odd.combine(&coords[de..]));
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        let p = self.even.ambient_dim();
        self.even.contains_vector(&v[..p]) && self.odd.contains_vector(&v[p..])
    }

    pub fn contains(&self, other: &GradedSubspace) -> bool {
        self.even.contains(&other.even) && self.odd.contains(&other.odd)
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        Ok(GradedSubspace { even: self.even.sum(&other.even)?, odd: self.odd.sum(&other.odd)? })
    }

    pub fn intersection(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        Ok(GradedSubspace { even: self.even.intersection(&other.even)?, odd: self.odd.intersection(&other.odd)? })
    }

    /// Greedy graded complement inside the whole space.
    pub fn complement(&self) -> GradedSubspace {
        GradedSubspace { even: self.even.complement(), odd: self.odd.complement() }
    }

    /// Greedy graded complement inside `within`.
    pub fn complement_in(&self, within: &GradedSubspace) -> Result<GradedSubspace> {
        Ok(GradedSubspace { even: self.even.complement_in(&within.even)?, odd: self.odd.complement_in(&within.odd)? })
    }

    /// Image under an even endomorphism of the ambient space.
    pub fn image(&self, m: &Matrix) -> Result<GradedSubspace> {
        let (p, q) = self.ambient_dims();
        let images = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        GradedSubspace::span_components(self.field(), p, q, &images)
    }

    /// First basis vector whose image under `m` leaves the subspace, with that image.
    pub fn invariance_violation(&self, m: &Matrix) -> Result<Option<Vec<Scalar>>> {
        for v in self.basis_vectors() {
            let image = m.mul_vec(&v)?;
            if !self.contains_vector(&image) {
                return Ok(Some(image));
            }
        }
        Ok(None)
    }
}

/// A decomposition of the ambient superspace as `first ⊕ second`.
#[derive(Clone, Debug)]
pub struct Splitting {
    first: GradedSubspace,
    second: GradedSubspace,
    // coordinate extraction per block: c = M v_local, c = (first coords, second coords)
    even_coords: Matrix,
    odd_coords: Matrix,
}

impl Splitting {
    pub fn new(first: GradedSubspace, second: GradedSubspace) -> Result<Self> {
        let even_coords = block_coords(first.even(), second.even())?;
        let odd_coords = block_coords(first.odd(), second.odd())?;
        Ok(Splitting { first, second, even_coords, odd_coords })
    }

    pub fn first(&self) -> &GradedSubspace {
        &self.first
    }

    pub fn second(&self) -> &GradedSubspace {
        &self.second
    }

    /// Coordinates of the two components of `v`, each in its summand's graded basis.
    pub fn split(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let p = self.first.even().ambient_dim();
        let ce = self.even_coords.mul_vec(&v[..p]).expect("even block length");
        let co = self.odd_coords.mul_vec(&v[p..]).expect("odd block length");
        let (fe, fo) = self.first.dims();
        let mut first = ce[..fe].to_vec();
        first.extend_from_slice(&co[..fo]);
        let mut second = ce[fe..].to_vec();
        second.extend_from_slice(&co[fo..]);
        (first, second)
    }

    /// Component of `v` in the first summand, in full coordinates.
    pub fn first_component(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.first.combine(&self.split(v).0)
    }

    /// Component of `v` in the second summand, in full coordinates.
    pub fn second_component(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.second.combine(&self.split(v).1)
    }

    /// `dim(first) x n` matrix sending a vector to its first-summand coordinates.
    pub fn first_projection(&self) -> Matrix {
        self.projection(true)
    }

    pub fn second_projection(&self) -> Matrix {
        self.projection(false)
    }

    fn projection(&self, first: bool) -> Matrix {
        let (p, q) = self.first.ambient_dims();
        let f = self.first.field();
        let cols: Vec<Vec<Scalar>> = (0..p + q)
            .map(|i| {
                let (a, b) = self.split(&vector::unit(f, p + q, i));
                if first {
                    a
                } else {
                    b
                }
            })
            .collect();
        let rows = if first { self.first.dim() } else { self.second.dim() };
        Matrix::from_columns(f, rows, &cols)
    }
}

fn block_coords(a: &Subspace, b: &Subspace) -> Result<Matrix> {
    let n = a.ambient_dim();
    if a.dim() + b.dim() != n {
        return Err(Error::NotAComplement(format!("dimensions {} + {} do not add up to {n}", a.dim(), b.dim())));
    }
    let stacked = a.basis().vstack(b.basis())?;
    let inv = stacked.inverse().ok_or_else(|| Error::NotAComplement("summands intersect nontrivially".into()))?;
    Ok(inv.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn homogeneous_spans() {
        let g = GradedSubspace::from_homogeneous(Q, 2, 1, &[v(&[1, 1, 0]), v(&[0, 0, 2])]).unwrap();
        assert_eq!(g.dims(), (1, 1));
        assert!(g.contains_vector(&v(&[3, 3, 5])));
        assert!(!g.contains_vector(&v(&[1, 0, 0])));
        assert!(GradedSubspace::from_homogeneous(Q, 2, 1, &[v(&[1, 0, 1])]).is_err());
        assert_eq!(g.basis_vectors(), vec![v(&[1, 1, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn splitting_recovers_components() {
        let a = GradedSubspace::from_homogeneous(Q, 2, 1, &[v(&[1, 1, 0])]).unwrap();
        let b = a.complement();
        assert_eq!(b.basis_vectors(), vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let s = Splitting::new(a.clone(), b).unwrap();
        let x = v(&[2, 5, 7]);
        let (ca, cb) = s.split(&x);
        assert_eq!(ca, v(&[2]));
        assert_eq!(cb, v(&[3, 7]));
        assert_eq!(vector::add(&s.first_component(&x), &s.second_component(&x)), x);
        assert!(Splitting::new(a.clone(), a).is_err());
    }
}
