//! Center, derived subalgebra, ideals, quotients, direct sums and subalgebras.

use std::collections::{BTreeMap, HashSet};

use super::graded::{GradedSubspace, Splitting};
use super::hom_lie::HomLieSuperalgebra;
use super::map::EvenLinearMap;
use super::space::SuperSpace;
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar};

/// `G/K` with coset representatives taken from a chosen graded complement of `K`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: HomLieSuperalgebra,
    /// `G -> G/K`
    pub projection: EvenLinearMap,
    /// `G/K -> G`, sending each basis coset to its representative.
    pub section: EvenLinearMap,
    pub ideal: GradedSubspace,
    pub complement: GradedSubspace,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v).expect("vector in the ambient algebra")
    }

    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(v).expect("vector in the quotient")
    }
}

impl HomLieSuperalgebra {
    /// `Z(G)`: kernel of `x -> ([x, b_j])_j`, computed separately on each parity block.
    pub fn center(&self) -> GradedSubspace {
        let (p, q) = self.dims();
        let n = self.dim();
        let f = self.field();
        let block = |range: std::ops::Range<usize>| {
            let cols = range.len();
            let mut rows = Vec::with_capacity(n * n);
            let brackets: Vec<Vec<Vec<Scalar>>> =
                range.clone().map(|i| (0..n).map(|j| self.basis_bracket(i, j)).collect()).collect();
            for (j, k) in (0..n).flat_map(|j| (0..n).map(move |k| (j, k))) {
                rows.push((0..cols).map(|c| brackets[c][j][k].clone()).collect());
            }
            Matrix::from_rows(f, cols, rows).expect("row lengths").nullspace()
        };
        GradedSubspace::new(block(0..p), block(p..p + q)).expect("same field")
    }

    /// `G'`: span of all basis brackets.
    pub fn derived(&self) -> GradedSubspace {
        let n = self.dim();
        let vectors: Vec<Vec<Scalar>> =
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| self.basis_bracket(i, j)).collect();
        self.span(&vectors)
    }

    /// Span of `[a, b]` over basis vectors `a` of `x` and `b` of `y`.
    pub fn bracket_span(&self, x: &GradedSubspace, y: &GradedSubspace) -> GradedSubspace {
        let xs = x.basis_vectors();
        let ys = y.basis_vectors();
        let vectors: Vec<Vec<Scalar>> =
            xs.iter().flat_map(|a| ys.iter().map(move |b| (a, b))).map(|(a, b)| self.bracket_unchecked(a, b)).collect();
        self.span(&vectors)
    }

    /// Graded dimensions of `G', G'', ...` until the series stabilises.
    pub fn derived_series(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut current = self.derived();
        loop {
            out.push(current.dims());
            let next = self.bracket_span(&current, &current);
            if next == current {
                return out;
            }
            current = next;
        }
    }

    /// `θ(K) ⊆ K` and `[K, G] ⊆ K`.
    pub fn is_hom_ideal(&self, k: &GradedSubspace) -> bool {
        assert_eq!(k.ambient_dims(), self.dims(), "subspace of a different superspace");
        let basis = k.basis_vectors();
        basis.iter().all(|v| k.contains_vector(&self.apply_twist(v)))
            && basis
                .iter()
                .all(|v| (0..self.dim()).all(|j| k.contains_vector(&self.bracket_unchecked(v, &self.unit(j)))))
    }

    /// `Z(G) ⊆ G'`.
    pub fn is_stem(&self) -> bool {
        self.derived().contains(&self.center())
    }

    /// `G/K` with representatives from the greedy graded complement of `K`.
    pub fn quotient(&self, k: &GradedSubspace) -> Result<Quotient> {
        self.quotient_by_complement(k, &k.complement())
    }

    /// `G/K` with representatives from the given graded complement `c`.
    pub fn quotient_by_complement(&self, k: &GradedSubspace, c: &GradedSubspace) -> Result<Quotient> {
        if !self.is_hom_ideal(k) {
            return Err(Error::NotAnIdeal("θ(K) ⊆ K and [K, G] ⊆ K must both hold".into()));
        }
        let split = Splitting::new(c.clone(), k.clone())?;
        let reps = c.basis_vectors();
        let m = reps.len();
        let f = self.field();
        let mut brackets = BTreeMap::new();
        for a in 0..m {
            for b in a..m {
                let (coords, _) = split.split(&self.bracket_unchecked(&reps[a], &reps[b]));
                brackets.insert((a, b), coords);
            }
        }
        let twist_cols: Vec<Vec<Scalar>> = reps.iter().map(|r| split.split(&self.apply_twist(r)).0).collect();
        let twist = Matrix::from_columns(f, m, &twist_cols);
        let (dp, dq) = c.dims();
        let space = SuperSpace::with_names(dp, dq, representative_names(self.space(), &reps, "q"))?;
        let algebra = HomLieSuperalgebra::new(f, space.clone(), twist, brackets)?;
        let projection = EvenLinearMap::new(self.space().clone(), space.clone(), split.first_projection())?;
        let section = EvenLinearMap::new(space, self.space().clone(), c.embedding())?;
        Ok(Quotient { algebra, projection, section, ideal: k.clone(), complement: c.clone() })
    }

    /// `G_1 ⊕ G_2` on (G_1 even, G_2 even, G_1 odd, G_2 odd) with the block twist.
    pub fn direct_sum(&self, other: &HomLieSuperalgebra) -> Result<HomLieSuperalgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        let f = self.field();
        let (pos1, pos2) = self.space().sum_positions(other.space());
        let n = self.dim() + other.dim();
        let (p1, q1) = self.dims();
        let (p2, q2) = other.dims();
        let embed = |v: &[Scalar], pos: &[usize]| {
            let mut out = vector::zeros(f, n);
            for (i, x) in v.iter().enumerate() {
                out[pos[i]] = x.clone();
            }
            out
        };
        let mut brackets = BTreeMap::new();
        for (g, pos) in [(self, &pos1), (other, &pos2)] {
            for (&(i, j), v) in g.stored_brackets() {
                brackets.insert((pos[i], pos[j]), embed(v, pos));
            }
        }
        let mut twist = Matrix::zeros(f, n, n);
        for (g, pos) in [(self, &pos1), (other, &pos2)] {
            for r in 0..g.dim() {
                for c in 0..g.dim() {
                    twist.set(pos[r], pos[c], g.twist().get(r, c).clone());
                }
            }
        }
        let mut names = vec![String::new(); n];
        let mut seen = HashSet::new();
        for (g, pos) in [(self, &pos1), (other, &pos2)] {
            for (i, name) in g.space().names().iter().enumerate() {
                let mut name = name.clone();
                while !seen.insert(name.clone()) {
                    name.push('\'');
                }
                names[pos[i]] = name;
            }
        }
        let space = SuperSpace::with_names(p1 + p2, q1 + q2, names)?;
        HomLieSuperalgebra::new(f, space, twist, brackets)
    }

    /// Inclusions of both summands into `self ⊕ other`.
    pub fn direct_sum_embeddings(
        &self,
        other: &HomLieSuperalgebra,
        sum: &HomLieSuperalgebra,
    ) -> Result<(EvenLinearMap, EvenLinearMap)> {
        let (pos1, pos2) = self.space().sum_positions(other.space());
        let f = self.field();
        let n = sum.dim();
        let inc = |g: &HomLieSuperalgebra, pos: &[usize]| {
            let m = Matrix::from_fn(f, n, g.dim(), |r, c| if pos[c] == r { f.one() } else { f.zero() });
            EvenLinearMap::between(g, sum, m)
        };
        Ok((inc(self, &pos1)?, inc(other, &pos2)?))
    }

    /// Projections of `self ⊕ other` onto each summand.
    pub fn direct_sum_projections(
        &self,
        other: &HomLieSuperalgebra,
        sum: &HomLieSuperalgebra,
    ) -> Result<(EvenLinearMap, EvenLinearMap)> {
        let (pos1, pos2) = self.space().sum_positions(other.space());
        let f = self.field();
        let n = sum.dim();
        let proj = |g: &HomLieSuperalgebra, pos: &[usize]| {
            let m = Matrix::from_fn(f, g.dim(), n, |r, c| if pos[r] == c { f.one() } else { f.zero() });
            EvenLinearMap::between(sum, g, m)
        };
        Ok((proj(self, &pos1)?, proj(other, &pos2)?))
    }

    /// The algebra induced on a twist-invariant, bracket-closed graded subspace, with its inclusion.
    pub fn subalgebra(&self, s: &GradedSubspace) -> Result<(HomLieSuperalgebra, EvenLinearMap)> {
        let basis = s.basis_vectors();
        let m = basis.len();
        let f = self.field();
        let coords = |v: &[Scalar], what: &str| {
            s.coordinates(v)
                .ok_or_else(|| Error::Precondition(format!("{what} {} leaves the subspace", vector::format(v))))
        };
        let mut brackets = BTreeMap::new();
        for a in 0..m {
            for b in a..m {
                brackets.insert((a, b), coords(&self.bracket_unchecked(&basis[a], &basis[b]), "bracket")?);
            }
        }
        let twist_cols =
            basis.iter().map(|v| coords(&self.apply_twist(v), "twist image")).collect::<Result<Vec<_>>>()?;
        let (dp, dq) = s.dims();
        let space = SuperSpace::with_names(dp, dq, representative_names(self.space(), &basis, "s"))?;
        let algebra = HomLieSuperalgebra::new(f, space.clone(), Matrix::from_columns(f, m, &twist_cols), brackets)?;
        let inclusion = EvenLinearMap::new(space, self.space().clone(), s.embedding())?;
        Ok((algebra, inclusion))
    }

    /// Matrix of the twist restricted to an invariant subspace, in its graded basis.
    pub fn twist_on(&self, s: &GradedSubspace) -> Result<Matrix> {
        let cols = s
            .basis_vectors()
            .iter()
            .map(|v| {
                let image = self.apply_twist(v);
                s.coordinates(&image)
                    .ok_or_else(|| Error::NotInvariant { what: "subspace".into(), witness: vector::format(&image) })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), s.dim(), &cols))
    }

    /// Graded span of vectors in this algebra.
    pub fn span(&self, vectors: &[Vec<Scalar>]) -> GradedSubspace {
        let (p, q) = self.dims();
        GradedSubspace::span_components(self.field(), p, q, vectors).expect("vectors of the algebra's length")
    }

    /// Graded subspace spanned by homogeneous vectors.
    pub fn graded_subspace(&self, vectors: &[Vec<Scalar>]) -> Result<GradedSubspace> {
        let (p, q) = self.dims();
        GradedSubspace::from_homogeneous(self.field(), p, q, vectors)
    }
}

/// Reuses the original basis name when a representative is a coordinate vector.
fn representative_names(space: &SuperSpace, reps: &[Vec<Scalar>], prefix: &str) -> Vec<String> {
    reps.iter()
        .enumerate()
        .map(|(a, v)| {
            let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            match nonzero.as_slice() {
                [i] if v[*i].is_one() => space.name(*i).to_string(),
                _ => format!("{prefix}{a}"),
            }
        })
        .collect()
}
