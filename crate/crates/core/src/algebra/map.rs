use super::hom_lie::HomLieSuperalgebra;
use super::report::ValidationReport;
use super::space::SuperSpace;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

/// An even linear map between superspaces; column `j` is the image of source basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenLinearMap {
    source: SuperSpace,
    target: SuperSpace,
    matrix: Matrix,
}

impl EvenLinearMap {
    pub fn new(source: SuperSpace, target: SuperSpace, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map ({}|{}) -> ({}|{})",
                matrix.rows(),
                matrix.cols(),
                source.even_dim(),
                source.odd_dim(),
                target.even_dim(),
                target.odd_dim()
            )));
        }
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                if target.parity(r) != source.parity(c) && !matrix.get(r, c).is_zero() {
                    return Err(Error::Precondition(format!("map entry ({r}, {c}) is not even")));
                }
            }
        }
        Ok(EvenLinearMap { source, target, matrix })
    }

    /// Map between the spaces of two algebras.
    pub fn between(source: &HomLieSuperalgebra, target: &HomLieSuperalgebra, matrix: Matrix) -> Result<Self> {
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        Self::new(source.space().clone(), target.space().clone(), matrix)
    }

    pub fn identity(field: Field, space: &SuperSpace) -> Self {
        EvenLinearMap { source: space.clone(), target: space.clone(), matrix: Matrix::identity(field, space.dim()) }
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ first`
    pub fn after(&self, first: &EvenLinearMap) -> Result<EvenLinearMap> {
        if first.target.dims() != self.source.dims() {
            return Err(Error::DimensionMismatch("composition of incompatible maps".into()));
        }
        Ok(EvenLinearMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
        })
    }

    pub fn inverse(&self) -> Result<EvenLinearMap> {
        let inv = self.matrix.inverse().ok_or_else(|| Error::Singular("even linear map".into()))?;
        Ok(EvenLinearMap { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// Same matrix with new endpoint labels of equal graded dimensions.
    pub fn relabel(&self, source: &SuperSpace, target: &SuperSpace) -> Result<EvenLinearMap> {
        EvenLinearMap::new(source.clone(), target.clone(), self.matrix.clone())
    }

    /// `f([x, y]) = [f x, f y]` on basis pairs and `f θ_1 = θ_2 f`.
    pub fn check_homomorphism(&self, g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.source.dims() != g1.dims() || self.target.dims() != g2.dims() {
            report.push("shape", vec![g1.dim(), g2.dim()], vec![], vec![]);
            return report;
        }
        let images: Vec<Vec<Scalar>> = self.matrix.columns();
        for i in 0..g1.dim() {
            for j in i..g1.dim() {
                let lhs = self.apply(&g1.basis_bracket(i, j)).expect("shape checked");
                let rhs = g2.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    report.push("bracket-preservation", vec![i, j], lhs, rhs);
                }
            }
        }
        let left = self.matrix.mul(g1.twist()).expect("shape checked");
        let right = g2.twist().mul(&self.matrix).expect("shape checked");
        for c in 0..g1.dim() {
            let (l, r) = (left.column(c), right.column(c));
            if l != r {
                report.push("twist-intertwining", vec![c], l, r);
            }
        }
        report
    }

    /// Homomorphism check plus bijectivity.
    pub fn check_isomorphism(&self, g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra) -> ValidationReport {
        let mut report = self.check_homomorphism(g1, g2);
        if report.passed() && !self.is_invertible() {
            report.push("bijective", vec![], vec![], vec![]);
        }
        report
    }

    pub fn is_isomorphism(&self, g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra) -> bool {
        self.check_isomorphism(g1, g2).passed()
    }
}
