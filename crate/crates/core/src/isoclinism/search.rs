use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{EvenLinearMap, HomLieSuperalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Isomorphism invariants: graded dimensions of `G`, `Z(G)`, `G'`, `Z(G) ∩ G'` and the
/// derived series, and characteristic polynomials of the twist on each parity block and
/// on `Z(G)` and `G'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dims: (usize, usize),
    pub center: (usize, usize),
    pub derived: (usize, usize),
    pub center_meet_derived: (usize, usize),
    pub derived_series: Vec<(usize, usize)>,
    pub twist_charpoly_even: Vec<String>,
    pub twist_charpoly_odd: Vec<String>,
    pub center_twist_charpoly: Vec<String>,
    pub derived_twist_charpoly: Vec<String>,
}

fn charpoly_strings(m: &Matrix) -> Vec<String> {
    m.charpoly().expect("square").iter().map(ToString::to_string).collect()
}

impl Fingerprint {
    pub fn of(g: &HomLieSuperalgebra) -> Fingerprint {
        let (p, q) = g.dims();
        let even: Vec<usize> = (0..p).collect();
        let odd: Vec<usize> = (p..p + q).collect();
        let z = g.center();
        let d = g.derived();
        let restricted = |s| g.twist_on(s).map(|m| charpoly_strings(&m)).unwrap_or_default();
        Fingerprint {
            dims: (p, q),
            center: z.dims(),
            derived: d.dims(),
            center_meet_derived: z.intersection(&d).expect("same space").dims(),
            derived_series: g.derived_series(),
            twist_charpoly_even: charpoly_strings(&g.twist().select(&even, &even)),
            twist_charpoly_odd: charpoly_strings(&g.twist().select(&odd, &odd)),
            center_twist_charpoly: restricted(&z),
            derived_twist_charpoly: restricted(&d),
        }
    }

    /// Name of the first differing invariant.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        if self.dims != other.dims {
            Some("graded dimension")
        } else if self.center != other.center {
            Some("center dimension")
        } else if self.derived != other.derived {
            Some("derived dimension")
        } else if self.center_meet_derived != other.center_meet_derived {
            Some("dimension of Z ∩ G'")
        } else if self.derived_series != other.derived_series {
            Some("derived series")
        } else if self.twist_charpoly_even != other.twist_charpoly_even {
            Some("characteristic polynomial of the even twist block")
        } else if self.twist_charpoly_odd != other.twist_charpoly_odd {
            Some("characteristic polynomial of the odd twist block")
        } else if self.center_twist_charpoly != other.center_twist_charpoly {
            Some("characteristic polynomial of the twist on Z")
        } else if self.derived_twist_charpoly != other.derived_twist_charpoly {
            Some("characteristic polynomial of the twist on G'")
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Isomorphic(EvenLinearMap),
    /// Proof of non-isomorphism: a differing invariant or an exhausted search space.
    NotIsomorphic(String),
    /// The budget ran out, or the search space is not finite.
    Inconclusive {
        examined: u64,
        reason: String,
    },
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub budget: u64,
    /// Diagonal entries tried over `Q`.
    pub rational_entries: Vec<Scalar>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions::with_budget(DEFAULT_BUDGET)
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        let q = Field::Rationals;
        let mut rational_entries = Vec::new();
        for (n, d) in [(1, 1), (2, 1), (3, 1), (4, 1), (9, 1), (1, 2), (1, 3), (1, 4), (1, 9)] {
            let x = q.parse(&format!("{n}/{d}")).expect("literal");
            rational_entries.push(x.clone());
            rational_entries.push(-x);
        }
        SearchOptions { budget, rational_entries }
    }
}

/// Searches for an isomorphism `G_1 -> G_2`.
///
/// Over `F_p` all even block matrices are enumerated in row-major lexicographic order of
/// their entries (even block first, then odd block) and the first isomorphism is returned,
/// so the answer is the lexicographically smallest one. Over `Q` only maps that permute
/// basis vectors within each parity and rescale them by entries from
/// `options.rational_entries` are tried, and a miss is never conclusive.
pub fn iso_search(g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra, options: &SearchOptions) -> Result<SearchOutcome> {
    if g1.field() != g2.field() {
        return Err(Error::FieldMismatch(g1.field(), g2.field()));
    }
    let (f1, f2) = (Fingerprint::of(g1), Fingerprint::of(g2));
    if let Some(what) = f1.first_difference(&f2) {
        return Ok(SearchOutcome::NotIsomorphic(format!("{what} differs")));
    }
    let checker = Checker::new(g1, g2);
    match g1.field() {
        Field::Prime(p) => Ok(search_prime(&checker, p, options.budget)),
        Field::Rationals => Ok(search_rational(&checker, &options.rational_entries, options.budget)),
    }
}

/// Candidate test with the cheapest conditions first.
struct Checker<'a> {
    g1: &'a HomLieSuperalgebra,
    g2: &'a HomLieSuperalgebra,
    p: usize,
    q: usize,
}

impl<'a> Checker<'a> {
    fn new(g1: &'a HomLieSuperalgebra, g2: &'a HomLieSuperalgebra) -> Self {
        let (p, q) = g1.dims();
        Checker { g1, g2, p, q }
    }

    /// Block-diagonal matrix from the even block entries followed by the odd block entries.
    fn matrix(&self, entries: &[Scalar]) -> Matrix {
        let (p, q) = (self.p, self.q);
        let f = self.g1.field();
        let mut m = Matrix::zeros(f, p + q, p + q);
        for r in 0..p {
            for c in 0..p {
                m.set(r, c, entries[r * p + c].clone());
            }
        }
        for r in 0..q {
            for c in 0..q {
                m.set(p + r, p + c, entries[p * p + r * q + c].clone());
            }
        }
        m
    }

    fn accepts(&self, m: &Matrix) -> bool {
        let (g1, g2) = (self.g1, self.g2);
        if m.mul(g1.twist()).expect("shape") != g2.twist().mul(m).expect("shape") {
            return false;
        }
        let images = m.columns();
        for (&(i, j), v) in g1.stored_brackets() {
            if m.mul_vec(v).expect("shape") != g2.bracket_unchecked(&images[i], &images[j]) {
                return false;
            }
        }
        // brackets that vanish in G_1 must vanish on the images too
        let n = g1.dim();
        for i in 0..n {
            for j in i..n {
                if !g1.stored_brackets().contains_key(&(i, j))
                    && !crate::linalg::vector::is_zero(&g2.bracket_unchecked(&images[i], &images[j]))
                {
                    return false;
                }
            }
        }
        m.is_invertible()
    }

    fn map(&self, m: Matrix) -> EvenLinearMap {
        EvenLinearMap::between(self.g1, self.g2, m).expect("block diagonal")
    }
}

fn search_prime(checker: &Checker, p: u64, budget: u64) -> SearchOutcome {
    let field = checker.g1.field();
    let free = checker.p * checker.p + checker.q * checker.q;
    let total = (p as u128).checked_pow(free as u32);
    let limit = match total {
        Some(t) if t <= budget as u128 => t as u64,
        _ => budget,
    };
    let decode = |mut idx: u64| {
        let mut entries = vec![field.zero(); free];
        for k in (0..free).rev() {
            entries[k] = field.from_i64((idx % p) as i64);
            idx /= p;
        }
        entries
    };
    let found = (0..limit).into_par_iter().find_first(|&idx| checker.accepts(&checker.matrix(&decode(idx))));
    match found {
        Some(idx) => SearchOutcome::Isomorphic(checker.map(checker.matrix(&decode(idx)))),
        None if total == Some(limit as u128) => {
            SearchOutcome::NotIsomorphic(format!("no isomorphism among all {limit} even maps"))
        }
        None => SearchOutcome::Inconclusive { examined: limit, reason: format!("budget of {budget} maps exhausted") },
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

fn search_rational(checker: &Checker, entries: &[Scalar], budget: u64) -> SearchOutcome {
    let field = checker.g1.field();
    let (p, q) = (checker.p, checker.q);
    let perms_even = permutations(p);
    let perms_odd = permutations(q);
    let perm_count = (perms_even.len() * perms_odd.len()) as u128;
    let scalings = (entries.len() as u128).checked_pow((p + q) as u32);
    let total = scalings.and_then(|s| s.checked_mul(perm_count));
    let limit = match total {
        Some(t) if t <= budget as u128 => t as u64,
        _ => budget,
    };
    let k = entries.len().max(1) as u64;
    let build = |idx: u64| {
        let mut rest = idx;
        let mut diag = vec![field.zero(); p + q];
        for slot in (0..p + q).rev() {
            diag[slot] = entries[(rest % k) as usize].clone();
            rest /= k;
        }
        let po = &perms_odd[(rest % perms_odd.len() as u64) as usize];
        rest /= perms_odd.len() as u64;
        let pe = &perms_even[rest as usize];
        let mut m = Matrix::zeros(field, p + q, p + q);
        for c in 0..p {
            m.set(pe[c], c, diag[c].clone());
        }
        for c in 0..q {
            m.set(p + po[c], p + c, diag[p + c].clone());
        }
        m
    };
    let found = (0..limit).into_par_iter().find_first(|&idx| checker.accepts(&build(idx)));
    match found {
        Some(idx) => SearchOutcome::Isomorphic(checker.map(build(idx))),
        None => SearchOutcome::Inconclusive {
            examined: limit,
            reason: "restricted search over permutation-times-diagonal maps found nothing".into(),
        },
    }
}
