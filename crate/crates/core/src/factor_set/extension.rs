use std::collections::BTreeMap;

use super::FactorSet;
use crate::algebra::{EvenLinearMap, GradedSubspace, HomLieSuperalgebra, Quotient, Splitting};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar};

/// The algebra `R = Z ⊕ Q` with bracket `[(g, a), (h, b)] = (r(a, b), [a, b])` and twist
/// `(g, a) -> (θ g, θ̃ a)`.
///
/// Coordinates are ordered (center even, quotient even, center odd, quotient odd).
#[derive(Clone, Debug)]
pub struct Extension {
    pub algebra: HomLieSuperalgebra,
    pub factor_set: FactorSet,
    center_positions: Vec<usize>,
    quotient_positions: Vec<usize>,
}

impl Extension {
    /// Position in `R` of each center basis vector.
    pub fn center_positions(&self) -> &[usize] {
        &self.center_positions
    }

    /// Position in `R` of each quotient basis vector.
    pub fn quotient_positions(&self) -> &[usize] {
        &self.quotient_positions
    }

    /// The vector `(g, a)` of `R`.
    pub fn point(&self, g: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.algebra.field(), self.algebra.dim());
        for (k, x) in g.iter().enumerate() {
            out[self.center_positions[k]] = x.clone();
        }
        for (k, x) in a.iter().enumerate() {
            out[self.quotient_positions[k]] = x.clone();
        }
        out
    }

    /// Inverse of [`Extension::point`].
    pub fn components(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let g = self.center_positions.iter().map(|&i| v[i].clone()).collect();
        let a = self.quotient_positions.iter().map(|&i| v[i].clone()).collect();
        (g, a)
    }

    /// `{(g, 0)}`
    pub fn center_part(&self) -> GradedSubspace {
        let vs: Vec<Vec<Scalar>> = self.center_positions.iter().map(|&i| self.algebra.unit(i)).collect();
        self.algebra.graded_subspace(&vs).expect("coordinate vectors are homogeneous")
    }
}

/// Builds `R` from a factor set, rejecting factor sets that fail validation.
pub fn extend(fs: &FactorSet) -> Result<Extension> {
    let report = fs.validate();
    if !report.passed() {
        return Err(Error::validation("factor set", report));
    }
    let center = fs.center_algebra();
    let quotient = fs.quotient();
    let skeleton = center.direct_sum(quotient)?;
    let (center_positions, quotient_positions) = center.space().sum_positions(quotient.space());
    let mut brackets: BTreeMap<(usize, usize), Vec<Scalar>> = skeleton.stored_brackets().clone();
    let n = skeleton.dim();
    for i in 0..quotient.dim() {
        for j in i..quotient.dim() {
            let value = fs.value(i, j);
            if vector::is_zero(&value) {
                continue;
            }
            let key = (quotient_positions[i], quotient_positions[j]);
            let entry = brackets.entry(key).or_insert_with(|| vector::zeros(fs.field(), n));
            for (k, x) in value.iter().enumerate() {
                entry[center_positions[k]] = &entry[center_positions[k]] + x;
            }
        }
    }
    let algebra = HomLieSuperalgebra::new(fs.field(), skeleton.space().clone(), skeleton.twist().clone(), brackets)?;
    Ok(Extension { algebra, factor_set: fs.clone(), center_positions, quotient_positions })
}

/// A graded complement `W` of `Z(G)` with the section `Ψ: G/Z(G) -> G` onto it.
#[derive(Clone, Debug)]
pub struct ComplementSplitting {
    pub complement: GradedSubspace,
    pub center: GradedSubspace,
    /// `G/Z(G)` with representatives in `W`.
    pub quotient: Quotient,
    /// `Ψ`
    pub section: EvenLinearMap,
    /// `G -> Z(G)` along `W`, in the center's basis.
    pub projection_to_center: Matrix,
}

/// Everything produced by reading a factor set off a complement of the center.
#[derive(Clone, Debug)]
pub struct FromComplement {
    pub factor_set: FactorSet,
    pub splitting: ComplementSplitting,
    pub extension: Extension,
    /// `π(g, a) = g + Ψ(a)`, an isomorphism `R -> G`.
    pub pi: EvenLinearMap,
}

/// `r(a, b) = [Ψa, Ψb] - Ψ[a, b]` for a twist-invariant complement `W` of the center.
///
/// Without `complement` the deterministic graded complement is used. Invariance of `W` is
/// checked rather than assumed.
pub fn factor_set_from_complement(
    g: &HomLieSuperalgebra,
    complement: Option<&GradedSubspace>,
) -> Result<FromComplement> {
    let multiplicative = g.check_multiplicative();
    if !multiplicative.passed() {
        return Err(Error::validation("algebra is not multiplicative", multiplicative));
    }
    if !g.check_regular() {
        return Err(Error::Precondition("twist is not invertible".into()));
    }
    let z = g.center();
    let w = match complement {
        Some(w) => w.clone(),
        None => z.complement(),
    };
    if w.ambient_dims() != g.dims() {
        return Err(Error::DimensionMismatch("complement lives in a different space".into()));
    }
    let split = Splitting::new(z.clone(), w.clone())?;
    if let Some(image) = w.invariance_violation(g.twist())? {
        return Err(Error::NotInvariant { what: "complement of the center".into(), witness: vector::format(&image) });
    }
    let quotient = g.quotient_by_complement(&z, &w)?;
    let (center_alg, _) = g.subalgebra(&z)?;
    let reps = w.basis_vectors();
    let q = &quotient.algebra;
    let mut coeffs = BTreeMap::new();
    for a in 0..q.dim() {
        for b in a..q.dim() {
            let lifted = quotient.lift(&q.basis_bracket(a, b));
            let value = vector::sub(&g.bracket_unchecked(&reps[a], &reps[b]), &lifted);
            let coords = z.coordinates(&value).ok_or_else(|| {
                Error::Precondition(format!("r({a}, {b}) = {} is not central", vector::format(&value)))
            })?;
            coeffs.insert((a, b), coords);
        }
    }
    let factor_set = FactorSet::new(q.clone(), center_alg.space().clone(), center_alg.twist().clone(), coeffs)?;
    let extension = extend(&factor_set)?;

    let f = g.field();
    let mut columns = vec![Vec::new(); g.dim()];
    for (k, zk) in z.basis_vectors().into_iter().enumerate() {
        columns[extension.center_positions[k]] = zk;
    }
    for (a, wa) in reps.into_iter().enumerate() {
        columns[extension.quotient_positions[a]] = wa;
    }
    let pi = EvenLinearMap::between(&extension.algebra, g, Matrix::from_columns(f, g.dim(), &columns))?;
    let report = pi.check_isomorphism(&extension.algebra, g);
    if !report.passed() {
        return Err(Error::validation("π is not an isomorphism", report));
    }

    let splitting = ComplementSplitting {
        complement: w,
        center: z,
        section: quotient.section.clone(),
        quotient,
        projection_to_center: split.first_projection(),
    };
    Ok(FromComplement { factor_set, splitting, extension, pi })
}
