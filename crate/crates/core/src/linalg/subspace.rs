//! Subspaces of `F^n` in canonical RREF form.

use super::matrix::{vector, Matrix};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace stored as the nonzero rows of its RREF spanning matrix, so two
/// subspaces are equal exactly when their bases are entry-identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(field, 0, ambient_dim) }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(field, ambient_dim) }
    }

    /// Span of the given vectors.
    pub fn from_vectors(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient_dim, vectors.to_vec())?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace { ambient_dim: m.cols(), basis: r.select(&keep, &cols) }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| (0..self.ambient_dim).find(|&c| !self.basis.get(r, c).is_zero()).expect("nonzero row"))
            .collect()
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` lies outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length differs from ambient dimension");
        // RREF rows: the coordinate on row k is the entry of v at pivot k.
        let coords: Vec<Scalar> = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let mut recon = vector::zeros(self.field(), self.ambient_dim);
        for (k, c) in coords.iter().enumerate() {
            vector::axpy(&mut recon, c, self.basis.row(k));
        }
        (recon == v).then_some(coords)
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = vector::zeros(self.field(), self.ambient_dim);
        for (k, c) in coords.iter().enumerate() {
            vector::axpy(&mut v, c, self.basis.row(k));
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection through the kernel of `[A^T | -B^T]`: each kernel vector `(a, b)`
    /// gives the common element `a A = b B`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let field = self.field();
        let stacked = self.basis.transpose().hstack(&other.basis.transpose().scale(&field.from_i64(-1)))?;
        let kernel = stacked.nullspace();
        let da = self.dim();
        let vectors: Vec<Vec<Scalar>> = kernel.basis_vectors().iter().map(|k| self.combine(&k[..da])).collect();
        Subspace::from_vectors(field, self.ambient_dim, &vectors)
    }

    /// A complement `C` of `self` inside `within`. In the coordinates of `within`'s RREF
    /// basis, `self` has an RREF with pivot set `P`; `C` is spanned by the basis vectors of
    /// `within` whose positions are not in `P`. For `within` the whole space this extends
    /// by the standard coordinate vectors at the non-pivot columns.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace> {
        self.compatible(within)?;
        if !within.contains(self) {
            return Err(Error::NotAComplement("subspace is not contained in the enclosing space".into()));
        }
        let coords: Vec<Vec<Scalar>> =
            self.basis_vectors().iter().map(|v| within.coordinates(v).expect("containment checked")).collect();
        let (_, pivots) = Matrix::from_rows(self.field(), within.dim(), coords)?.rref();
        let chosen: Vec<Vec<Scalar>> = within
            .basis_vectors()
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains(i))
            .map(|(_, v)| v)
            .collect();
        Subspace::from_vectors(self.field(), self.ambient_dim, &chosen)
    }

    pub fn complement(&self) -> Subspace {
        self.complement_in(&Subspace::full(self.field(), self.ambient_dim))
            .expect("every subspace lies in its ambient space")
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let images = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.field(), m.rows(), &images)
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = vs.iter().map(|v| v.iter().map(|&x| Q.from_i64(x)).collect()).collect();
        Subspace::from_vectors(Q, n, &vs).unwrap()
    }

    #[test]
    fn complement_extends_greedily() {
        let e1 = span(2, &[&[1, 0]]);
        assert_eq!(e1.complement(), span(2, &[&[0, 1]]));
        let d = span(2, &[&[1, 1]]);
        assert_eq!(d.complement(), span(2, &[&[0, 1]]));
        let u = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(e1.sum(&Subspace::zero(Q, 2)).unwrap(), e1);
        let w = span(3, &[&[1, 0, 0]]);
        assert_eq!(w.complement_in(&u).unwrap(), span(3, &[&[0, 1, 0]]));
        assert!(span(3, &[&[0, 0, 1]]).complement_in(&u).is_err());
    }

    #[test]
    fn intersection_example() {
        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), span(3, &[&[0, 1, 0]]));
    }

    #[test]
    fn zero_is_contained_everywhere() {
        let z = Subspace::zero(Q, 3);
        assert!(span(3, &[&[1, 2, 3]]).contains(&z));
        assert!(z.contains(&z));
        assert!(!z.contains(&span(3, &[&[1, 2, 3]])));
    }

    #[test]
    fn equality_is_syntactic() {
        assert_eq!(span(2, &[&[2, 4], &[1, 2]]), span(2, &[&[1, 2]]));
        let s = span(3, &[&[1, 1, 0], &[0, 2, 2]]);
        assert_eq!(s.coordinates(&[Q.from_i64(1), Q.from_i64(3), Q.from_i64(2)]).unwrap().len(), 2);
        assert!(s.coordinates(&[Q.one(), Q.zero(), Q.zero()]).is_none());
    }

    fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, n), 0..=n).prop_map(move |vs| {
            let vs: Vec<Vec<Scalar>> = vs.iter().map(|v| v.iter().map(|&x| Q.from_i64(x)).collect()).collect();
            Subspace::from_vectors(Q, n, &vs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn complement_is_direct(u in subspace(4), extra in subspace(4)) {
            let v = u.sum(&extra).unwrap();
            let c = u.complement_in(&v).unwrap();
            prop_assert_eq!(c.dim() + u.dim(), v.dim());
            prop_assert!(c.intersection(&u).unwrap().is_zero());
            prop_assert_eq!(c.sum(&u).unwrap(), v);
        }

        #[test]
        fn intersection_dimension_formula(a in subspace(4), b in subspace(4)) {
            let i = a.intersection(&b).unwrap();
            let s = a.sum(&b).unwrap();
            prop_assert_eq!(i.dim() + s.dim(), a.dim() + b.dim());
            prop_assert!(a.contains(&i) && b.contains(&i));
        }
    }
}
