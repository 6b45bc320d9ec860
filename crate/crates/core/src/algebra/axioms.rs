//! Axiom validators. Every check reports concrete witnesses in lexicographic index order.

use rayon::prelude::*;
use serde::Serialize;

use super::hom_lie::HomLieSuperalgebra;
use super::report::{Failure, ValidationReport};
use super::space::Parity;
use crate::linalg::{vector, Scalar};

/// Results of every per-algebra check.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomSummary {
    pub parity: ValidationReport,
    pub graded_skew: ValidationReport,
    pub hom_jacobi: ValidationReport,
    pub multiplicative: ValidationReport,
    pub regular: bool,
}

impl AxiomSummary {
    /// Parity, graded skew-symmetry and the graded Hom-Jacobi identity.
    pub fn is_hom_lie(&self) -> bool {
        self.parity.passed() && self.graded_skew.passed() && self.hom_jacobi.passed()
    }

    pub fn is_regular_hom_lie(&self) -> bool {
        self.is_hom_lie() && self.multiplicative.passed() && self.regular
    }

    pub fn combined(&self) -> ValidationReport {
        self.parity
            .clone()
            .merged(self.graded_skew.clone())
            .merged(self.hom_jacobi.clone())
            .merged(self.multiplicative.clone())
    }
}

impl HomLieSuperalgebra {
    pub fn check_all(&self) -> AxiomSummary {
        AxiomSummary {
            parity: self.check_parity(),
            graded_skew: self.check_graded_skew(),
            hom_jacobi: self.check_hom_jacobi(),
            multiplicative: self.check_multiplicative(),
            regular: self.check_regular(),
        }
    }

    /// Stored constants land in the right parity and the twist is block-diagonal.
    pub fn check_parity(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let f = self.field();
        for (&(i, j), v) in self.stored_brackets() {
            let expected = self.parity(i) + self.parity(j);
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() && self.parity(k) != expected {
                    report.push("parity", vec![i, j, k], vec![c.clone()], vec![f.zero()]);
                }
            }
        }
        let t = self.twist();
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                if self.parity(r) != self.parity(c) && !t.get(r, c).is_zero() {
                    report.push("twist-parity", vec![r, c], vec![t.get(r, c).clone()], vec![f.zero()]);
                }
            }
        }
        report
    }

    /// `[b_i, b_j] = -(-1)^{|i||j|} [b_j, b_i]` for all `i >= j`, diagonal included.
    pub fn check_graded_skew(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for i in 0..self.dim() {
            for j in 0..=i {
                let lhs = self.basis_bracket(i, j);
                let negative = !Parity::sign_negative(self.parity(i), self.parity(j));
                let rhs = vector::scale(&Scalar::sign(self.field(), negative), &self.basis_bracket(j, i));
                if lhs != rhs {
                    report.push("graded-skew", vec![i, j], lhs, rhs);
                }
            }
        }
        report
    }

    /// Cyclic graded Hom-Jacobi sum on every basis triple `i <= j <= k`.
    pub fn check_hom_jacobi(&self) -> ValidationReport {
        let n = self.dim();
        let triples: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| (i, j, k)))).collect();
        let failures: Vec<Failure> = triples
            .par_iter()
            .filter_map(|&(i, j, k)| {
                let sum = self.jacobi_sum(i, j, k);
                (!vector::is_zero(&sum)).then(|| Failure {
                    axiom: "hom-jacobi".into(),
                    indices: vec![i, j, k],
                    lhs: sum,
                    rhs: vector::zeros(self.field(), n),
                })
            })
            .collect();
        ValidationReport::from_failures(failures)
    }

    /// `(-1)^{|x||z|}[θx,[y,z]] + (-1)^{|z||y|}[θz,[x,y]] + (-1)^{|y||x|}[θy,[z,x]]`
    /// on basis vectors `x = b_i, y = b_j, z = b_k`.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let f = self.field();
        let (pi, pj, pk) = (self.parity(i), self.parity(j), self.parity(k));
        let term = |a: usize, b: usize, c: usize, negative: bool| {
            let inner = self.basis_bracket(b, c);
            let outer = self.bracket_unchecked(&self.apply_twist(&self.unit(a)), &inner);
            vector::scale(&Scalar::sign(f, negative), &outer)
        };
        let mut sum = term(i, j, k, Parity::sign_negative(pi, pk));
        sum = vector::add(&sum, &term(k, i, j, Parity::sign_negative(pk, pj)));
        vector::add(&sum, &term(j, k, i, Parity::sign_negative(pj, pi)))
    }

    /// `θ([b_i, b_j]) = [θ(b_i), θ(b_j)]` for all `i <= j`.
    pub fn check_multiplicative(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let twisted: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.apply_twist(&self.unit(i))).collect();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let lhs = self.apply_twist(&self.basis_bracket(i, j));
                let rhs = self.bracket_unchecked(&twisted[i], &twisted[j]);
                if lhs != rhs {
                    report.push("multiplicative", vec![i, j], lhs, rhs);
                }
            }
        }
        report
    }

    /// Whether the twist is bijective.
    pub fn check_regular(&self) -> bool {
        self.twist().is_invertible()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::{Field, Matrix};

    const Q: Field = Field::Rationals;

    #[test]
    fn hs_bracket_examples() {
        let hs = corpus::hs(Q);
        let (z, f) = (hs.unit(0), hs.unit(1));
        assert_eq!(hs.bracket(&f, &f).unwrap(), z);
        assert!(vector::is_zero(&hs.bracket(&z, &f).unwrap()));
        let a = corpus::abelian(Q, 2, 2);
        assert!(vector::is_zero(&a.bracket(&a.unit(0), &a.unit(3)).unwrap()));
        assert!(hs.bracket(&z, &a.unit(0)).is_err());
    }

    #[test]
    fn non_homogeneous_bracket_is_bilinear() {
        let g = corpus::super22(Q);
        let x = vector::add(&g.unit(0), &g.unit(2));
        let y = vector::add(&g.unit(1), &g.unit(3));
        let mut expected = vector::zeros(Q, 4);
        for a in [0, 2] {
            for b in [1, 3] {
                expected = vector::add(&expected, &g.basis_bracket(a, b));
            }
        }
        assert_eq!(g.bracket(&x, &y).unwrap(), expected);
    }

    #[test]
    fn skew_examples() {
        assert!(corpus::hs(Q).check_graded_skew().passed());
        assert!(corpus::abelian(Q, 1, 2).check_graded_skew().passed());
        let g = HomLieSuperalgebra::builder(Q, 3, 0).bracket(0, 1, &[(2, 1)]).build().unwrap();
        assert!(g.check_graded_skew().passed());
        let bad = g.with_raw_bracket(1, 0, vec![Q.zero(), Q.zero(), Q.one()]);
        let report = bad.check_graded_skew();
        assert!(!report.passed());
        // e2 and e1 in one-based naming
        assert_eq!(report.failures()[0].indices, vec![1, 0]);
        assert_eq!(report.failures()[0].lhs, vec![Q.zero(), Q.zero(), Q.one()]);
        assert_eq!(report.failures()[0].rhs, vec![Q.zero(), Q.zero(), Q.from_i64(-1)]);
    }

    #[test]
    fn even_diagonal_must_vanish() {
        let g = HomLieSuperalgebra::builder(Q, 2, 0).bracket(0, 0, &[(1, 1)]).build().unwrap();
        let r = g.check_graded_skew();
        assert_eq!(r.failures().len(), 1);
        assert_eq!(r.failures()[0].indices, vec![0, 0]);
    }

    #[test]
    fn jacobi_examples() {
        assert!(corpus::hs(Q).check_hom_jacobi().passed());
        assert!(corpus::t2(Q).check_hom_jacobi().passed());
        // HS with an extra [z, f] = f
        let bad =
            HomLieSuperalgebra::builder(Q, 1, 1).bracket(1, 1, &[(0, 1)]).bracket(0, 1, &[(1, 1)]).build().unwrap();
        let r = bad.check_hom_jacobi();
        assert!(!r.passed());
        let w = &r.failures()[0];
        assert_eq!(w.indices.len(), 3);
        assert_eq!(bad.jacobi_sum(w.indices[0], w.indices[1], w.indices[2]), w.lhs);
    }

    #[test]
    fn multiplicative_examples() {
        assert!(corpus::hs(Q).check_multiplicative().passed());
        assert!(corpus::t2(Q).check_multiplicative().passed());
        let t2 = corpus::t2(Q);
        let bad = t2.with_twist(Matrix::from_i64(Q, &[&[2, 0], &[0, 2]])).unwrap();
        let r = bad.check_multiplicative();
        assert_eq!(r.failures().len(), 1);
        assert_eq!(r.failures()[0].lhs, vec![Q.from_i64(2), Q.zero()]);
        assert_eq!(r.failures()[0].rhs, vec![Q.from_i64(4), Q.zero()]);
    }

    #[test]
    fn regular_examples() {
        assert!(corpus::hs(Q).check_regular());
        assert!(corpus::t2(Q).check_regular());
        let a = corpus::abelian(Q, 1, 1).with_twist(Matrix::zeros(Q, 2, 2)).unwrap();
        assert!(!a.check_regular());
    }

    #[test]
    fn parity_violation_is_reported() {
        let bad = corpus::hs(Q).with_raw_bracket(1, 1, vec![Q.one(), Q.one()]);
        let r = bad.check_parity();
        assert_eq!(r.failures()[0].indices, vec![1, 1, 1]);
    }

    #[test]
    fn corpus_passes_everything() {
        for (name, g) in corpus::all() {
            let s = g.check_all();
            assert!(s.is_regular_hom_lie(), "{name}: {}", s.combined().summary());
        }
    }
}
