use crate::algebra::{EvenLinearMap, GradedSubspace, HomLieSuperalgebra, Splitting};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar, Subspace};

/// `G ≅ P ⊕ Q` with `P` stem and `Q` abelian.
#[derive(Clone, Debug)]
pub struct StemDecomposition {
    pub stem_part: HomLieSuperalgebra,
    pub abelian_part: HomLieSuperalgebra,
    /// `P ⊕ Q`
    pub sum: HomLieSuperalgebra,
    /// `G -> P ⊕ Q`
    pub iso: EvenLinearMap,
    /// The subspace of `G` carrying `P`; contains `G'`.
    pub stem_subspace: GradedSubspace,
    /// The subspace of `G` carrying `Q`; central.
    pub abelian_subspace: GradedSubspace,
}

/// Splits off a maximal central summand.
///
/// With `C = Z(G) ∩ G'`, finds a twist-invariant complement `A` of `C` in `Z(G)` and a
/// twist-invariant complement `P_0 ⊇ G'` of `A` in `G`. Both are found by solving the linear
/// (Sylvester-type) equations that parametrise all such complements, so failure means no
/// invariant complement exists.
pub fn stem_decompose(g: &HomLieSuperalgebra) -> Result<StemDecomposition> {
    let multiplicative = g.check_multiplicative();
    if !multiplicative.passed() {
        return Err(Error::validation("algebra is not multiplicative", multiplicative));
    }
    if !g.check_regular() {
        return Err(Error::Precondition("twist is not invertible".into()));
    }
    let z = g.center();
    let d = g.derived();
    let c = z.intersection(&d)?;
    let f = g.field();
    let (p, q) = g.dims();
    let zero = GradedSubspace::zero(f, p, q);

    let a = invariant_complement(g, &z, &c, &zero)
        .ok_or_else(|| Error::Precondition("Z(G) ∩ G' has no twist-invariant complement in Z(G)".into()))?;
    let full = GradedSubspace::full(f, p, q);
    let p0 = invariant_complement(g, &full, &a, &d).ok_or_else(|| {
        Error::Precondition("the central summand has no twist-invariant complement containing G'".into())
    })?;

    let (stem_part, _) = g.subalgebra(&p0)?;
    let (abelian_part, _) = g.subalgebra(&a)?;
    if !stem_part.is_stem() {
        return Err(Error::Precondition("the complementary part is not stem".into()));
    }
    let sum = stem_part.direct_sum(&abelian_part)?;
    let (pos_p, pos_q) = stem_part.space().sum_positions(abelian_part.space());
    let split = Splitting::new(p0.clone(), a.clone())?;
    let columns: Vec<Vec<Scalar>> = (0..g.dim())
        .map(|i| {
            let (cp, cq) = split.split(&g.unit(i));
            let mut out = vector::zeros(f, g.dim());
            for (k, x) in cp.into_iter().enumerate() {
                out[pos_p[k]] = x;
            }
            for (k, x) in cq.into_iter().enumerate() {
                out[pos_q[k]] = x;
            }
            out
        })
        .collect();
    let iso = EvenLinearMap::between(g, &sum, Matrix::from_columns(f, g.dim(), &columns))?;
    let report = iso.check_isomorphism(g, &sum);
    if !report.passed() {
        return Err(Error::validation("G -> P ⊕ Q", report));
    }
    Ok(StemDecomposition { stem_part, abelian_part, sum, iso, stem_subspace: p0, abelian_subspace: a })
}

/// A twist-invariant complement of the invariant subspace `x` inside the invariant
/// subspace `y` that contains the invariant subspace `k` (with `k ∩ x = 0`), if one exists.
fn invariant_complement(
    g: &HomLieSuperalgebra,
    y: &GradedSubspace,
    x: &GradedSubspace,
    k: &GradedSubspace,
) -> Option<GradedSubspace> {
    let (p, q) = g.dims();
    let t = g.twist();
    let even: Vec<usize> = (0..p).collect();
    let odd: Vec<usize> = (p..p + q).collect();
    let te = t.select(&even, &even);
    let to = t.select(&odd, &odd);
    let e = block_complement(&te, y.even(), x.even(), k.even())?;
    let o = block_complement(&to, y.odd(), x.odd(), k.odd())?;
    GradedSubspace::new(e, o).ok()
}

/// One parity block of [`invariant_complement`]. With `b` a complement of `k ⊕ x` in `y`,
/// every complement of `x` in `y` containing `k` is `k + span{b_j + Σ_i M_ij x_i}`; it is
/// invariant exactly when `T_xb + T_xx M = M T_bb`.
fn block_complement(theta: &Matrix, y: &Subspace, x: &Subspace, k: &Subspace) -> Option<Subspace> {
    let f = theta.field();
    let kx = k.sum(x).ok()?;
    let b = kx.complement_in(y).ok()?;
    let (kv, xv, bv) = (k.basis_vectors(), x.basis_vectors(), b.basis_vectors());
    let (nk, nx, nb) = (kv.len(), xv.len(), bv.len());
    let basis: Vec<Vec<Scalar>> = kv.iter().chain(&xv).chain(&bv).cloned().collect();
    let frame = Matrix::from_columns(f, theta.rows(), &basis);
    let coords = |v: &[Scalar]| frame.solve(v).ok().flatten().expect("y is twist-invariant");

    let mut t_xx = Matrix::zeros(f, nx, nx);
    for (j, v) in xv.iter().enumerate() {
        let c = coords(&theta.mul_vec(v).ok()?);
        for i in 0..nx {
            t_xx.set(i, j, c[nk + i].clone());
        }
    }
    let mut t_xb = Matrix::zeros(f, nx, nb);
    let mut t_bb = Matrix::zeros(f, nb, nb);
    for (j, v) in bv.iter().enumerate() {
        let c = coords(&theta.mul_vec(v).ok()?);
        for i in 0..nx {
            t_xb.set(i, j, c[nk + i].clone());
        }
        for i in 0..nb {
            t_bb.set(i, j, c[nk + nx + i].clone());
        }
    }

    // unknown M[i][j] at index i * nb + j; equation (T_xx M - M T_bb)_ij = -T_xb_ij
    let unknowns = nx * nb;
    let mut system = Matrix::zeros(f, unknowns, unknowns);
    let mut rhs = Vec::with_capacity(unknowns);
    for i in 0..nx {
        for j in 0..nb {
            let row = i * nb + j;
            for l in 0..nx {
                let col = l * nb + j;
                system.set(row, col, system.get(row, col) + t_xx.get(i, l));
            }
            for l in 0..nb {
                let col = i * nb + l;
                system.set(row, col, system.get(row, col) - t_bb.get(l, j));
            }
            rhs.push(-t_xb.get(i, j));
        }
    }
    let m = system.solve(&rhs).ok()??;
    let mut vectors = kv;
    for (j, bj) in bv.iter().enumerate() {
        let mut v = bj.clone();
        for (i, xi) in xv.iter().enumerate() {
            vector::axpy(&mut v, &m[i * nb + j], xi);
        }
        vectors.push(v);
    }
    Subspace::from_vectors(f, theta.rows(), &vectors).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::Field;

    const Q: Field = Field::Rationals;

    fn check(g: &HomLieSuperalgebra, d: &StemDecomposition) {
        let (pp, pq) = d.stem_part.dims();
        let (ap, aq) = d.abelian_part.dims();
        assert_eq!((pp + ap, pq + aq), g.dims());
        assert!(d.stem_part.dim() == 0 || d.stem_part.is_stem());
        assert!(d.abelian_part.is_abelian());
        assert!(g.center().contains(&d.abelian_subspace));
        assert!(d.iso.is_isomorphism(g, &d.sum));
    }

    #[test]
    fn hs2_splits_into_hs_and_a_line() {
        let g = corpus::hs2(Q);
        let d = stem_decompose(&g).unwrap();
        check(&g, &d);
        assert_eq!(d.stem_part.stored_brackets(), corpus::hs(Q).stored_brackets());
        assert_eq!(d.abelian_part.dims(), (1, 0));
    }

    #[test]
    fn stem_algebras_are_their_own_stem_part() {
        let g = corpus::hs(Q);
        let d = stem_decompose(&g).unwrap();
        check(&g, &d);
        assert_eq!(d.stem_part, g);
        assert_eq!(d.abelian_part.dim(), 0);
    }

    #[test]
    fn abelian_algebras_are_all_abelian_part() {
        let g = corpus::abelian(Q, 1, 1);
        let d = stem_decompose(&g).unwrap();
        check(&g, &d);
        assert_eq!(d.stem_part.dim(), 0);
        assert_eq!(d.abelian_part.dims(), (1, 1));
    }

    #[test]
    fn invariant_complement_needs_a_correction() {
        // {z, c | f}, [f, f] = z, θ(c) = 2c + z: the greedy complement span{c} of
        // span{z} is not invariant, span{c + z} is.
        let g = HomLieSuperalgebra::builder(Q, 2, 1)
            .names(&["z", "c", "f"])
            .bracket(2, 2, &[(0, 1)])
            .twist(Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 2, 0], &[0, 0, 1]]))
            .build()
            .unwrap();
        assert!(g.check_all().is_regular_hom_lie());
        let d = stem_decompose(&g).unwrap();
        check(&g, &d);
        assert_eq!(d.abelian_subspace, g.graded_subspace(&[vector::add(&g.unit(0), &g.unit(1))]).unwrap());
    }

    #[test]
    fn jordan_block_on_the_center_has_no_invariant_complement() {
        // θ(c) = c + z: θ(c + λz) = (c + λz) + z, so span{z} has no invariant complement in Z.
        let g = HomLieSuperalgebra::builder(Q, 2, 1)
            .names(&["z", "c", "f"])
            .bracket(2, 2, &[(0, 1)])
            .twist(Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]))
            .build()
            .unwrap();
        assert!(g.check_all().is_regular_hom_lie());
        assert!(matches!(stem_decompose(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn corpus_decomposes() {
        for (name, g) in corpus::all() {
            let d = stem_decompose(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
            check(&g, &d);
        }
    }
}
