//! Factor sets `r: Q × Q -> Z`, the extensions they define, and maps between extensions.

mod calculus;
mod extension;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{Failure, HomLieSuperalgebra, Parity, SuperSpace, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

pub use calculus::{build_beta, extract_automorphisms, extract_tau, transport_factor_set, Transport};
pub use extension::{extend, factor_set_from_complement, ComplementSplitting, Extension, FromComplement};

/// A bilinear map from a quotient algebra `Q` into a central space `Z` with its own twist.
///
/// Values are stored for quotient basis pairs `i <= j`; the rest follow from graded skew
/// symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    quotient: HomLieSuperalgebra,
    center_space: SuperSpace,
    center_twist: Matrix,
    coeffs: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl FactorSet {
    pub fn new(
        quotient: HomLieSuperalgebra,
        center_space: SuperSpace,
        center_twist: Matrix,
        coeffs: BTreeMap<(usize, usize), Vec<Scalar>>,
    ) -> Result<Self> {
        let f = quotient.field();
        let (m, k) = (quotient.dim(), center_space.dim());
        if center_twist.rows() != k || center_twist.cols() != k {
            return Err(Error::DimensionMismatch(format!(
                "center twist is {}x{}, expected {k}x{k}",
                center_twist.rows(),
                center_twist.cols()
            )));
        }
        if center_twist.field() != f {
            return Err(Error::FieldMismatch(center_twist.field(), f));
        }
        for r in 0..k {
            for c in 0..k {
                if center_space.parity(r) != center_space.parity(c) && !center_twist.get(r, c).is_zero() {
                    return Err(Error::InvalidAlgebra(format!("center twist entry ({r}, {c}) mixes parities")));
                }
            }
        }
        let mut stored = BTreeMap::new();
        for ((i, j), v) in coeffs {
            if i > j || j >= m {
                return Err(Error::InvalidAlgebra(format!("factor set entry ({i}, {j}) needs i <= j < {m}")));
            }
            if v.len() != k {
                return Err(Error::InvalidAlgebra(format!("factor set entry ({i}, {j}) has {} coordinates", v.len())));
            }
            if let Some(s) = v.iter().find(|s| s.field() != f) {
                return Err(Error::FieldMismatch(s.field(), f));
            }
            let expected = quotient.parity(i) + quotient.parity(j);
            if let Some(c) = (0..k).find(|&c| !v[c].is_zero() && center_space.parity(c) != expected) {
                return Err(Error::InvalidAlgebra(format!(
                    "factor set entry ({i}, {j}) has a component on z{c} of the wrong parity"
                )));
            }
            if !vector::is_zero(&v) {
                stored.insert((i, j), v);
            }
        }
        Ok(FactorSet { quotient, center_space, center_twist, coeffs: stored })
    }

    /// The zero factor set.
    pub fn zero(quotient: HomLieSuperalgebra, center_space: SuperSpace, center_twist: Matrix) -> Result<Self> {
        Self::new(quotient, center_space, center_twist, BTreeMap::new())
    }

    /// Stores a value bypassing the load-time checks, `i > j` included.
    pub fn with_raw_value(mut self, i: usize, j: usize, value: Vec<Scalar>) -> Self {
        assert_eq!(value.len(), self.center_space.dim(), "raw value length");
        self.coeffs.insert((i, j), value);
        self
    }

    pub fn field(&self) -> Field {
        self.quotient.field()
    }

    pub fn quotient(&self) -> &HomLieSuperalgebra {
        &self.quotient
    }

    pub fn center_space(&self) -> &SuperSpace {
        &self.center_space
    }

    pub fn center_twist(&self) -> &Matrix {
        &self.center_twist
    }

    /// The center as an abelian algebra with its twist.
    pub fn center_algebra(&self) -> HomLieSuperalgebra {
        HomLieSuperalgebra::new(self.field(), self.center_space.clone(), self.center_twist.clone(), BTreeMap::new())
            .expect("checked at construction")
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.coeffs
    }

    /// `r(q_i, q_j)`, deriving unstored `i > j` entries by graded skew symmetry.
    pub fn value(&self, i: usize, j: usize) -> Vec<Scalar> {
        if let Some(v) = self.coeffs.get(&(i, j)) {
            return v.clone();
        }
        if i > j {
            if let Some(v) = self.coeffs.get(&(j, i)) {
                let negative = !Parity::sign_negative(self.quotient.parity(i), self.quotient.parity(j));
                return vector::scale(&Scalar::sign(self.field(), negative), v);
            }
        }
        vector::zeros(self.field(), self.center_space.dim())
    }

    /// Bilinear extension of `r` to arbitrary quotient vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vector::zeros(self.field(), self.center_space.dim());
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                vector::axpy(&mut acc, &(xi * yj), &self.value(i, j));
            }
        }
        acc
    }

    pub fn apply_center_twist(&self, z: &[Scalar]) -> Vec<Scalar> {
        self.center_twist.mul_vec(z).expect("center vector")
    }

    /// Parity of values, graded skew symmetry on `i >= j`, and the twisted cocycle identity
    /// `r([a, b], θ̃c) = r(θ̃a, [b, c]) - (-1)^{|a||b|} r(θ̃b, [a, c])` on every ordered basis triple.
    pub fn validate(&self) -> ValidationReport {
        let q = &self.quotient;
        let m = q.dim();
        let f = self.field();
        let mut report = ValidationReport::new();
        for (&(i, j), v) in &self.coeffs {
            let expected = q.parity(i) + q.parity(j);
            for (c, s) in v.iter().enumerate() {
                if !s.is_zero() && self.center_space.parity(c) != expected {
                    report.push("factor-parity", vec![i, j, c], vec![s.clone()], vec![f.zero()]);
                }
            }
        }
        for i in 0..m {
            for j in 0..=i {
                let lhs = self.value(i, j);
                let negative = !Parity::sign_negative(q.parity(i), q.parity(j));
                let rhs = vector::scale(&Scalar::sign(f, negative), &self.value(j, i));
                if lhs != rhs {
                    report.push("factor-skew", vec![i, j], lhs, rhs);
                }
            }
        }
        let twisted: Vec<Vec<Scalar>> = (0..m).map(|i| q.apply_twist(&q.unit(i))).collect();
        let triples: Vec<(usize, usize, usize)> =
            (0..m).flat_map(|i| (0..m).flat_map(move |j| (0..m).map(move |k| (i, j, k)))).collect();
        let failures: Vec<Failure> = triples
            .par_iter()
            .filter_map(|&(i, j, k)| {
                let lhs = self.eval(&q.basis_bracket(i, j), &twisted[k]);
                let first = self.eval(&twisted[i], &q.basis_bracket(j, k));
                let second = self.eval(&twisted[j], &q.basis_bracket(i, k));
                let sign = Scalar::sign(f, Parity::sign_negative(q.parity(i), q.parity(j)));
                let rhs = vector::sub(&first, &vector::scale(&sign, &second));
                (lhs != rhs).then(|| Failure { axiom: "factor-cocycle".into(), indices: vec![i, j, k], lhs, rhs })
            })
            .collect();
        report.merge(ValidationReport::from_failures(failures));
        report
    }

    /// `r(θ̃a, θ̃b) = θ r(a, b)` on basis pairs `i <= j`.
    pub fn multiplicativity_report(&self) -> ValidationReport {
        let q = &self.quotient;
        let twisted: Vec<Vec<Scalar>> = (0..q.dim()).map(|i| q.apply_twist(&q.unit(i))).collect();
        let mut report = ValidationReport::new();
        for i in 0..q.dim() {
            for j in i..q.dim() {
                let lhs = self.eval(&twisted[i], &twisted[j]);
                let rhs = self.apply_center_twist(&self.value(i, j));
                if lhs != rhs {
                    report.push("factor-multiplicative", vec![i, j], lhs, rhs);
                }
            }
        }
        report
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_report().passed()
    }
}

pub fn validate_factor_set(fs: &FactorSet) -> ValidationReport {
    fs.validate()
}

pub fn check_multiplicative_factor_set(fs: &FactorSet) -> bool {
    fs.is_multiplicative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const Q: Field = Field::Rationals;

    fn hs_factor_set(field: Field, twist_z: i64, twist_f: i64) -> FactorSet {
        let quotient =
            HomLieSuperalgebra::builder(field, 0, 1).names(&["f"]).twist_diagonal(&[twist_f]).build().unwrap();
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), vec![field.one()]);
        let z = SuperSpace::with_names(1, 0, vec!["z".into()]).unwrap();
        FactorSet::new(quotient, z, Matrix::from_i64(field, &[&[twist_z]]), coeffs).unwrap()
    }

    #[test]
    fn zero_factor_set_passes() {
        let fs = FactorSet::zero(corpus::hs(Q), SuperSpace::new(1, 1), Matrix::identity(Q, 2)).unwrap();
        assert!(fs.validate().passed());
        assert!(fs.is_multiplicative());
    }

    #[test]
    fn odd_odd_values_are_symmetric() {
        let quotient = corpus::abelian(Q, 0, 2);
        let fs = FactorSet::zero(quotient, SuperSpace::new(1, 0), Matrix::identity(Q, 1))
            .unwrap()
            .with_raw_value(0, 1, vec![Q.one()])
            .with_raw_value(1, 0, vec![Q.from_i64(-1)]);
        let r = fs.validate();
        let skew: Vec<_> = r.failures().iter().filter(|x| x.axiom == "factor-skew").collect();
        assert_eq!(skew.len(), 1);
        assert_eq!(skew[0].indices, vec![1, 0]);
        assert_eq!(skew[0].rhs, vec![Q.one()]);
    }

    #[test]
    fn hs_data_is_a_multiplicative_factor_set() {
        let fs = hs_factor_set(Q, 1, 1);
        assert!(fs.validate().passed());
        assert!(fs.is_multiplicative());
        let t2 = hs_factor_set(Q, 4, 2);
        assert!(t2.validate().passed());
        assert!(t2.is_multiplicative());
    }

    #[test]
    fn t2_data_with_identity_center_twist_is_not_multiplicative() {
        let fs = hs_factor_set(Q, 1, 2);
        assert!(fs.validate().passed());
        let r = fs.multiplicativity_report();
        assert_eq!(r.failures().len(), 1);
        assert_eq!(r.failures()[0].lhs, vec![Q.from_i64(4)]);
        assert_eq!(r.failures()[0].rhs, vec![Q.one()]);
    }

    #[test]
    fn wrong_parity_value_is_rejected_at_construction() {
        let quotient = corpus::abelian(Q, 0, 1);
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), vec![Q.one()]);
        assert!(FactorSet::new(quotient, SuperSpace::new(0, 1), Matrix::identity(Q, 1), coeffs).is_err());
    }

    #[test]
    fn cocycle_failure_is_detected() {
        // Q = {x | u} with [x, u] = u and r(u, u) = z
        let quotient = HomLieSuperalgebra::builder(Q, 1, 1).bracket(0, 1, &[(1, 1)]).build().unwrap();
        let mut coeffs = BTreeMap::new();
        coeffs.insert((1, 1), vec![Q.one()]);
        let fs = FactorSet::new(quotient, SuperSpace::new(1, 0), Matrix::identity(Q, 1), coeffs).unwrap();
        let r = fs.validate();
        let w = r.failures().iter().find(|x| x.indices == vec![0, 1, 1]).expect("witness (x, u, u)");
        assert_eq!(w.axiom, "factor-cocycle");
        assert_eq!(w.lhs, vec![Q.one()]);
        assert_eq!(w.rhs, vec![Q.from_i64(-1)]);
    }
}
