use std::collections::BTreeMap;

use super::extension::{extend, Extension};
use super::FactorSet;
use crate::algebra::{EvenLinearMap, HomLieSuperalgebra, Splitting};
use crate::error::{Error, Result};
use crate::isoclinism::{verify_isoclinism, Frame, IsoclinismWitness};
use crate::linalg::{vector, Matrix, Scalar};

/// Output of [`transport_factor_set`].
#[derive(Clone, Debug)]
pub struct Transport {
    /// `r` over `G_1`'s central quotient and center.
    pub factor_set: FactorSet,
    /// `(g, a) -> (N g, μ a)`, an isomorphism from `extend(r)` to `extend(s)`, where `N` is
    /// `ν` restricted to the centers.
    pub beta: EvenLinearMap,
}

fn same_structure(a: &HomLieSuperalgebra, b: &HomLieSuperalgebra) -> bool {
    a.field() == b.field()
        && a.dims() == b.dims()
        && a.stored_brackets() == b.stored_brackets()
        && a.twist() == b.twist()
}

/// Pulls a factor set `s` over `G_2` back along an isoclinism `(μ, ν): G_1 -> G_2` of stem
/// algebras: `r(a, b) = N⁻¹ s(μa, μb)` with `N = ν|_{Z(G_1)}`.
///
/// `s` must be written over `G_2`'s canonical central quotient and center basis.
pub fn transport_factor_set(
    s: &FactorSet,
    witness: &IsoclinismWitness,
    g1: &HomLieSuperalgebra,
    g2: &HomLieSuperalgebra,
) -> Result<Transport> {
    for (name, g) in [("G1", g1), ("G2", g2)] {
        if !g.check_regular() || !g.check_multiplicative().passed() {
            return Err(Error::Precondition(format!("{name} is not multiplicative and regular")));
        }
        if !g.is_stem() {
            return Err(Error::Precondition(format!("{name} is not stem")));
        }
    }
    let report = verify_isoclinism(g1, g2, witness);
    if !report.passed() {
        return Err(Error::validation("isoclinism witness", report));
    }
    let (f1, f2) = (Frame::new(g1)?, Frame::new(g2)?);
    if !same_structure(s.quotient(), f2.quotient_algebra()) {
        return Err(Error::Precondition("s is not written over G2's central quotient".into()));
    }
    let (z2_alg, _) = g2.subalgebra(&f2.center)?;
    if s.center_space().dims() != f2.center.dims() || s.center_twist() != z2_alg.twist() {
        return Err(Error::Precondition("s is not written over G2's center".into()));
    }

    let field = g1.field();
    let n_cols: Vec<Vec<Scalar>> = f1
        .center
        .basis_vectors()
        .iter()
        .map(|z| {
            let d = f1.derived_coords(z).expect("stem: Z(G1) ⊆ G1'");
            let image = f2.derived.combine(&witness.nu.apply(&d)?);
            f2.center.coordinates(&image).ok_or_else(|| {
                Error::Precondition(format!("ν sends a central vector to {}, outside Z(G2)", vector::format(&image)))
            })
        })
        .collect::<Result<_>>()?;
    let n = Matrix::from_columns(field, f2.center.dim(), &n_cols);
    let n_inv = n.inverse().ok_or_else(|| Error::Singular("ν restricted to the centers".into()))?;

    let q1 = f1.quotient_algebra();
    let mu_cols = witness.mu.matrix().columns();
    let mut coeffs = BTreeMap::new();
    for a in 0..q1.dim() {
        for b in a..q1.dim() {
            coeffs.insert((a, b), n_inv.mul_vec(&s.eval(&mu_cols[a], &mu_cols[b]))?);
        }
    }
    let (z1_alg, _) = g1.subalgebra(&f1.center)?;
    let r = FactorSet::new(q1.clone(), z1_alg.space().clone(), z1_alg.twist().clone(), coeffs)?;
    let (ext_r, ext_s) = (extend(&r)?, extend(s)?);
    let beta = block_map(&ext_r, &ext_s, &n, &Matrix::zeros(field, n.rows(), q1.dim()), witness.mu.matrix())?;
    let report = beta.check_isomorphism(&ext_r.algebra, &ext_s.algebra);
    if !report.passed() {
        return Err(Error::validation("transported extension map", report));
    }
    Ok(Transport { factor_set: r, beta })
}

/// The map `R -> S` with blocks `center -> center = a`, `quotient -> center = b` and
/// `quotient -> quotient = c`.
fn block_map(r: &Extension, s: &Extension, a: &Matrix, b: &Matrix, c: &Matrix) -> Result<EvenLinearMap> {
    let field = r.algebra.field();
    let mut m = Matrix::zeros(field, s.algebra.dim(), r.algebra.dim());
    let (rc, rq) = (r.center_positions(), r.quotient_positions());
    let (sc, sq) = (s.center_positions(), s.quotient_positions());
    for (col, &pc) in rc.iter().enumerate() {
        for (row, &ps) in sc.iter().enumerate() {
            m.set(ps, pc, a.get(row, col).clone());
        }
    }
    for (col, &pc) in rq.iter().enumerate() {
        for (row, &ps) in sc.iter().enumerate() {
            m.set(ps, pc, b.get(row, col).clone());
        }
        for (row, &ps) in sq.iter().enumerate() {
            m.set(ps, pc, c.get(row, col).clone());
        }
    }
    EvenLinearMap::between(&r.algebra, &s.algebra, m)
}

/// `ψ(r(a, b) + τ[a, b]) = s(φa, φb)` on basis pairs `i <= j`.
fn compatibility(
    phi: &EvenLinearMap,
    psi: &EvenLinearMap,
    tau: &EvenLinearMap,
    r: &FactorSet,
    s: &FactorSet,
) -> Result<crate::ValidationReport> {
    let q = r.quotient();
    let mut report = crate::ValidationReport::new();
    let images = phi.matrix().columns();
    for i in 0..q.dim() {
        for j in i..q.dim() {
            let inner = vector::add(&r.value(i, j), &tau.apply(&q.basis_bracket(i, j))?);
            let lhs = psi.apply(&inner)?;
            let rhs = s.eval(&images[i], &images[j]);
            if lhs != rhs {
                report.push("compatibility", vec![i, j], lhs, rhs);
            }
        }
    }
    Ok(report)
}

fn check_shapes(
    phi: &EvenLinearMap,
    psi: &EvenLinearMap,
    tau: &EvenLinearMap,
    r: &FactorSet,
    s: &FactorSet,
) -> Result<()> {
    let ok = phi.source().dims() == r.quotient().dims()
        && phi.target().dims() == s.quotient().dims()
        && psi.source().dims() == r.center_space().dims()
        && psi.target().dims() == s.center_space().dims()
        && tau.source().dims() == r.quotient().dims()
        && tau.target().dims() == r.center_space().dims();
    if ok {
        Ok(())
    } else {
        Err(Error::DimensionMismatch("φ: Q_r -> Q_s, ψ: Z_r -> Z_s and τ: Q_r -> Z_r required".into()))
    }
}

/// `β(g, a) = (ψ(g + τa), φa)` from `extend(r)` to `extend(s)`.
///
/// Requires `ψ(r(a, b) + τ[a, b]) = s(φa, φb)` and `τθ̃ = θτ`; both are checked, and the
/// result is verified to be an isomorphism of extensions.
pub fn build_beta(
    phi: &EvenLinearMap,
    psi: &EvenLinearMap,
    tau: &EvenLinearMap,
    r: &FactorSet,
    s: &FactorSet,
) -> Result<EvenLinearMap> {
    check_shapes(phi, psi, tau, r, s)?;
    let report = compatibility(phi, psi, tau, r, s)?;
    if !report.passed() {
        return Err(Error::validation("ψ(r + τ[·,·]) = s(φ·, φ·)", report));
    }
    let left = tau.matrix().mul(r.quotient().twist())?;
    let right = r.center_twist().mul(tau.matrix())?;
    if left != right {
        let mut report = crate::ValidationReport::new();
        for c in 0..left.cols() {
            if left.column(c) != right.column(c) {
                report.push("tau-intertwining", vec![c], left.column(c), right.column(c));
            }
        }
        return Err(Error::validation("τθ̃ = θτ", report));
    }
    let (ext_r, ext_s) = (extend(r)?, extend(s)?);
    let psi_tau = psi.matrix().mul(tau.matrix())?;
    let beta = block_map(&ext_r, &ext_s, psi.matrix(), &psi_tau, phi.matrix())?;
    let report = beta.check_isomorphism(&ext_r.algebra, &ext_s.algebra);
    if !report.passed() {
        return Err(Error::validation("β is not an isomorphism of extensions", report));
    }
    Ok(beta)
}

/// Reads `(φ, ψ)` off an isomorphism `β: R -> S` of extensions that maps `{(g, 0)}` onto
/// `{(g, 0)}`: `ψ` is the center block and `φ` the quotient block.
pub fn extract_automorphisms(
    beta: &EvenLinearMap,
    r: &Extension,
    s: &Extension,
) -> Result<(EvenLinearMap, EvenLinearMap)> {
    let report = beta.check_isomorphism(&r.algebra, &s.algebra);
    if !report.passed() {
        return Err(Error::validation("β is not an isomorphism", report));
    }
    let m = beta.matrix();
    for &col in r.center_positions() {
        if s.quotient_positions().iter().any(|&row| !m.get(row, col).is_zero()) {
            return Err(Error::Precondition(format!(
                "β sends the central basis vector at {col} to {}, outside the center part",
                vector::format(&m.column(col))
            )));
        }
    }
    let psi_m = m.select(s.center_positions(), r.center_positions());
    let phi_m = m.select(s.quotient_positions(), r.quotient_positions());
    let (zr, zs) = (r.factor_set.center_algebra(), s.factor_set.center_algebra());
    let (qr, qs) = (r.factor_set.quotient(), s.factor_set.quotient());
    let psi = EvenLinearMap::between(&zr, &zs, psi_m)?;
    let phi = EvenLinearMap::between(qr, qs, phi_m)?;
    let report = psi.check_isomorphism(&zr, &zs);
    if !report.passed() {
        return Err(Error::validation("ψ", report));
    }
    let report = phi.check_isomorphism(qr, qs);
    if !report.passed() {
        return Err(Error::validation("φ", report));
    }
    Ok((phi, psi))
}

/// `ε: Q -> Z` with `ψ(r(a, b) + ε[a, b]) = s(φa, φb)`, read off `β` as `ψ⁻¹` of its
/// quotient-to-center block on the span `Q'` of quotient brackets, and zero on the
/// deterministic complement of `Q'`. The identity is re-verified.
pub fn extract_tau(
    beta: &EvenLinearMap,
    phi: &EvenLinearMap,
    psi: &EvenLinearMap,
    r: &FactorSet,
    s: &FactorSet,
) -> Result<EvenLinearMap> {
    let (ext_r, ext_s) = (extend(r)?, extend(s)?);
    let (phi_b, psi_b) = extract_automorphisms(beta, &ext_r, &ext_s)?;
    if phi_b.matrix() != phi.matrix() || psi_b.matrix() != psi.matrix() {
        return Err(Error::Precondition("β does not induce the given (φ, ψ)".into()));
    }
    let m = beta.matrix();
    let block = m.select(ext_s.center_positions(), ext_r.quotient_positions());
    let psi_inv = psi.inverse()?;
    let full = psi_inv.matrix().mul(&block)?;

    let q = r.quotient();
    let derived = q.derived();
    let split = Splitting::new(derived.clone(), derived.complement())?;
    let cols: Vec<Vec<Scalar>> =
        (0..q.dim()).map(|a| full.mul_vec(&split.first_component(&q.unit(a)))).collect::<Result<_>>()?;
    let eps = EvenLinearMap::new(
        q.space().clone(),
        r.center_space().clone(),
        Matrix::from_columns(q.field(), r.center_space().dim(), &cols),
    )?;
    let report = compatibility(phi, psi, &eps, r, s)?;
    if !report.passed() {
        return Err(Error::validation("extracted ε fails ψ(r + ε[·,·]) = s(φ·, φ·)", report));
    }
    Ok(eps)
}
