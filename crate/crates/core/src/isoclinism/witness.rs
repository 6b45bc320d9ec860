use crate::algebra::{EvenLinearMap, GradedSubspace, HomLieSuperalgebra, Quotient, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar};

/// Identifier of the basis conventions a witness is written in.
pub const QUOTIENT_CONVENTION: &str = "central-quotient/greedy-complement";
pub const DERIVED_CONVENTION: &str = "derived/rref";

/// The canonical bases an isoclinism witness refers to: `G/Z(G)` with representatives from
/// the deterministic complement of the center, and `G'` with its graded RREF basis.
#[derive(Clone, Debug)]
pub struct Frame {
    pub center: GradedSubspace,
    pub quotient: Quotient,
    pub derived: GradedSubspace,
    pub derived_algebra: HomLieSuperalgebra,
}

impl Frame {
    pub fn new(g: &HomLieSuperalgebra) -> Result<Frame> {
        let center = g.center();
        let quotient = g.quotient(&center)?;
        let derived = g.derived();
        let (derived_algebra, _) = g.subalgebra(&derived)?;
        Ok(Frame { center, quotient, derived, derived_algebra })
    }

    /// Coordinates in `G'` of a vector of `G` known to lie there.
    pub fn derived_coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.derived.coordinates(v)
    }

    pub fn quotient_algebra(&self) -> &HomLieSuperalgebra {
        &self.quotient.algebra
    }
}

/// A pair `(μ, ν)`: `μ: G_1/Z(G_1) -> G_2/Z(G_2)` and `ν: G_1' -> G_2'` in canonical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoclinismWitness {
    pub mu: EvenLinearMap,
    pub nu: EvenLinearMap,
}

impl IsoclinismWitness {
    pub fn identity(g: &HomLieSuperalgebra) -> Result<IsoclinismWitness> {
        let frame = Frame::new(g)?;
        Ok(IsoclinismWitness {
            mu: EvenLinearMap::identity(g.field(), frame.quotient.algebra.space()),
            nu: EvenLinearMap::identity(g.field(), frame.derived_algebra.space()),
        })
    }

    /// `(μ_2 μ_1, ν_2 ν_1)` for `self = (μ_1, ν_1)` and `then = (μ_2, ν_2)`.
    pub fn then(&self, then: &IsoclinismWitness) -> Result<IsoclinismWitness> {
        Ok(IsoclinismWitness { mu: then.mu.after(&self.mu)?, nu: then.nu.after(&self.nu)? })
    }

    pub fn inverse(&self) -> Result<IsoclinismWitness> {
        Ok(IsoclinismWitness { mu: self.mu.inverse()?, nu: self.nu.inverse()? })
    }
}

/// Checks that `μ` and `ν` are isomorphisms intertwining the induced twists, that the
/// bracket square commutes, `ν([m_1, m_2]) = [μ m_1, μ m_2]`, on every pair of quotient
/// basis vectors, and that `μ(d + Z(G_1)) = ν(d) + Z(G_2)` for each basis vector `d` of `G_1'`.
pub fn verify_isoclinism(g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra, w: &IsoclinismWitness) -> ValidationReport {
    let mut report = ValidationReport::new();
    let (f1, f2) = match (Frame::new(g1), Frame::new(g2)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            report.push("frame", vec![], vec![], vec![]);
            return report;
        }
    };
    let (q1, q2) = (f1.quotient_algebra(), f2.quotient_algebra());
    let (d1, d2) = (&f1.derived_algebra, &f2.derived_algebra);
    for (name, map, a, b) in [("mu", &w.mu, q1, q2), ("nu", &w.nu, d1, d2)] {
        for fail in map.check_isomorphism(a, b).failures() {
            report.push(&format!("{name} {}", fail.axiom), fail.indices.clone(), fail.lhs.clone(), fail.rhs.clone());
        }
    }
    if !report.passed() {
        return report;
    }

    let reps2: Vec<Vec<Scalar>> = w.mu.matrix().columns().iter().map(|c| f2.quotient.lift(c)).collect();
    let reps1: Vec<Vec<Scalar>> = (0..q1.dim()).map(|i| f1.quotient.lift(&q1.unit(i))).collect();
    for i in 0..q1.dim() {
        for j in i..q1.dim() {
            let sigma = g1.bracket_unchecked(&reps1[i], &reps1[j]);
            let lhs = w.nu.apply(&f1.derived_coords(&sigma).expect("brackets lie in G'")).expect("shape checked");
            let rho = g2.bracket_unchecked(&reps2[i], &reps2[j]);
            let rhs = f2.derived_coords(&rho).expect("brackets lie in G'");
            if lhs != rhs {
                report.push("square", vec![i, j], lhs, rhs);
            }
        }
    }

    for (k, d) in f1.derived.basis_vectors().iter().enumerate() {
        let lhs = w.mu.apply(&f1.quotient.project(d)).expect("shape checked");
        let image = f2.derived.combine(&w.nu.matrix().column(k));
        let rhs = f2.quotient.project(&image);
        if lhs != rhs {
            report.push("coset", vec![k], lhs, rhs);
        }
    }
    report
}

/// The witness induced by a homomorphism `f: G_1 -> G_2` with `f(Z(G_1)) ⊆ Z(G_2)`:
/// `μ(m + Z(G_1)) = f(m) + Z(G_2)` and `ν = f` restricted to `G_1'`.
pub fn witness_from_map(
    g1: &HomLieSuperalgebra,
    g2: &HomLieSuperalgebra,
    f: &EvenLinearMap,
) -> Result<IsoclinismWitness> {
    let (f1, f2) = (Frame::new(g1)?, Frame::new(g2)?);
    let field = g1.field();
    let mu_cols: Vec<Vec<Scalar>> = (0..f1.quotient_algebra().dim())
        .map(|i| {
            let rep = f1.quotient.lift(&f1.quotient_algebra().unit(i));
            f.apply(&rep).map(|img| f2.quotient.project(&img))
        })
        .collect::<Result<_>>()?;
    let nu_cols: Vec<Vec<Scalar>> = f1
        .derived
        .basis_vectors()
        .iter()
        .map(|d| {
            let img = f.apply(d)?;
            f2.derived_coords(&img).ok_or_else(|| {
                Error::Precondition(format!("image {} of a derived vector is not in G2'", vector::format(&img)))
            })
        })
        .collect::<Result<_>>()?;
    let mu = EvenLinearMap::new(
        f1.quotient_algebra().space().clone(),
        f2.quotient_algebra().space().clone(),
        Matrix::from_columns(field, f2.quotient_algebra().dim(), &mu_cols),
    )?;
    let nu = EvenLinearMap::new(
        f1.derived_algebra.space().clone(),
        f2.derived_algebra.space().clone(),
        Matrix::from_columns(field, f2.derived.dim(), &nu_cols),
    )?;
    Ok(IsoclinismWitness { mu, nu })
}

/// `G_1 ∼ G_1 ⊕ G_2` for abelian `G_2`, induced by the inclusion of the first summand.
pub fn isoclinism_abelian_sum(
    g1: &HomLieSuperalgebra,
    g2: &HomLieSuperalgebra,
) -> Result<(HomLieSuperalgebra, IsoclinismWitness)> {
    if !g2.is_abelian() {
        return Err(Error::Precondition("second summand is not abelian".into()));
    }
    let sum = g1.direct_sum(g2)?;
    let (inclusion, _) = g1.direct_sum_embeddings(g2, &sum)?;
    let w = witness_from_map(g1, &sum, &inclusion)?;
    Ok((sum, w))
}

/// A quotient isoclinism produced by [`isoclinism_quotient`].
#[derive(Clone, Debug)]
pub struct QuotientIsoclinism {
    /// `G`, or `G/(K ∩ G')` in the weak form.
    pub source: HomLieSuperalgebra,
    /// `G/K`
    pub target: HomLieSuperalgebra,
    pub witness: IsoclinismWitness,
}

/// The isoclinism induced by the natural projection.
///
/// With `strong`, requires `K ∩ G' = 0` and returns `G ∼ G/K`. Otherwise returns
/// `G/(K ∩ G') ∼ G/K`.
pub fn isoclinism_quotient(g: &HomLieSuperalgebra, k: &GradedSubspace, strong: bool) -> Result<QuotientIsoclinism> {
    if !g.is_hom_ideal(k) {
        return Err(Error::NotAnIdeal("θ(K) ⊆ K and [K, G] ⊆ K must both hold".into()));
    }
    let meet = k.intersection(&g.derived())?;
    if strong && !meet.is_zero() {
        return Err(Error::Precondition(format!("K ∩ G' has dimension {:?}, not zero", meet.dims())));
    }
    let target = g.quotient(k)?;
    if meet.is_zero() {
        let w = witness_from_map(g, &target.algebra, &target.projection)?;
        return Ok(QuotientIsoclinism { source: g.clone(), target: target.algebra, witness: w });
    }
    // G/(K ∩ G') -> G/K, x + (K ∩ G') -> x + K
    let source = g.quotient(&meet)?;
    let to_target = target.projection.after(&source.section)?;
    let w = witness_from_map(&source.algebra, &target.algebra, &to_target)?;
    Ok(QuotientIsoclinism { source: source.algebra, target: target.algebra, witness: w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::Field;

    const Q: Field = Field::Rationals;

    fn scaled_witness(g: &HomLieSuperalgebra, mu: i64, nu: i64) -> IsoclinismWitness {
        let frame = Frame::new(g).unwrap();
        IsoclinismWitness {
            mu: EvenLinearMap::new(
                frame.quotient.algebra.space().clone(),
                frame.quotient.algebra.space().clone(),
                Matrix::from_i64(Q, &[&[mu]]),
            )
            .unwrap(),
            nu: EvenLinearMap::new(
                frame.derived_algebra.space().clone(),
                frame.derived_algebra.space().clone(),
                Matrix::from_i64(Q, &[&[nu]]),
            )
            .unwrap(),
        }
    }

    #[test]
    fn identity_witness_verifies() {
        for (name, g) in corpus::all() {
            let w = IsoclinismWitness::identity(&g).unwrap();
            assert!(verify_isoclinism(&g, &g, &w).passed(), "{name}");
        }
    }

    #[test]
    fn scaling_witnesses_on_hs() {
        let hs = corpus::hs(Q);
        assert!(verify_isoclinism(&hs, &hs, &scaled_witness(&hs, 2, 4)).passed());
        let bad = verify_isoclinism(&hs, &hs, &scaled_witness(&hs, 2, 2));
        let square = bad.failures().iter().find(|f| f.axiom == "square").unwrap();
        assert_eq!(square.lhs, vec![Q.from_i64(2)]);
        assert_eq!(square.rhs, vec![Q.from_i64(4)]);
    }

    #[test]
    fn abelian_sum_witnesses() {
        let hs = corpus::hs(Q);
        let (sum, w) = isoclinism_abelian_sum(&hs, &corpus::abelian(Q, 1, 0)).unwrap();
        assert!(verify_isoclinism(&hs, &sum, &w).passed());
        let (sum0, w0) = isoclinism_abelian_sum(&hs, &corpus::abelian(Q, 0, 0)).unwrap();
        assert_eq!(sum0, hs);
        assert_eq!(w0, IsoclinismWitness::identity(&hs).unwrap());
        let a = corpus::abelian(Q, 1, 1);
        let (s, w) = isoclinism_abelian_sum(&a, &corpus::abelian(Q, 0, 1)).unwrap();
        assert_eq!(w.mu.matrix().rows(), 0);
        assert!(verify_isoclinism(&a, &s, &w).passed());
        assert!(isoclinism_abelian_sum(&hs, &hs).is_err());
    }

    #[test]
    fn quotient_witnesses() {
        let hs2 = corpus::hs2(Q);
        let c = hs2.graded_subspace(&[hs2.unit(1)]).unwrap();
        let out = isoclinism_quotient(&hs2, &c, true).unwrap();
        assert_eq!(out.target.dims(), (1, 1));
        assert!(verify_isoclinism(&hs2, &out.target, &out.witness).passed());

        let zero = GradedSubspace::zero(Q, 2, 1);
        let same = isoclinism_quotient(&hs2, &zero, true).unwrap();
        assert_eq!(same.target, hs2);
        assert_eq!(same.witness, IsoclinismWitness::identity(&hs2).unwrap());

        let hs = corpus::hs(Q);
        assert!(isoclinism_quotient(&hs, &hs.center(), true).is_err());
        let weak = isoclinism_quotient(&hs, &hs.center(), false).unwrap();
        assert!(verify_isoclinism(&weak.source, &weak.target, &weak.witness).passed());
    }

    #[test]
    fn composition_and_inverse_preserve_verification() {
        let hs = corpus::hs(Q);
        let hs2 = corpus::hs2(Q);
        let (sum, w1) = isoclinism_abelian_sum(&hs, &corpus::abelian(Q, 1, 0)).unwrap();
        let c = hs2.graded_subspace(&[hs2.unit(1)]).unwrap();
        let q = isoclinism_quotient(&hs2, &c, true).unwrap();
        // sum and hs2 coincide up to names
        assert_eq!(sum.stored_brackets(), hs2.stored_brackets());
        let back = q.witness.inverse().unwrap();
        assert!(verify_isoclinism(&q.target, &hs2, &back).passed());
        let w2 = w1.then(&q.witness).unwrap();
        assert!(verify_isoclinism(&hs, &q.target, &w2).passed());
    }
}
