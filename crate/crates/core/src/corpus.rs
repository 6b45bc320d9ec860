//! Small algebras used throughout the tests and shipped as JSON under `corpus/`.

use crate::algebra::HomLieSuperalgebra;
use crate::linalg::Field;

/// `A(p|q)`: zero bracket, identity twist.
pub fn abelian(field: Field, even_dim: usize, odd_dim: usize) -> HomLieSuperalgebra {
    HomLieSuperalgebra::abelian(field, even_dim, odd_dim, None).expect("valid")
}

/// Basis `{z | f}`, `[f, f] = z`, identity twist.
pub fn hs(field: Field) -> HomLieSuperalgebra {
    HomLieSuperalgebra::builder(field, 1, 1).names(&["z", "f"]).bracket(1, 1, &[(0, 1)]).build().expect("valid")
}

/// `hs ⊕ A(1|0)`: basis `{z, c | f}`, `[f, f] = z`, identity twist.
pub fn hs2(field: Field) -> HomLieSuperalgebra {
    HomLieSuperalgebra::builder(field, 2, 1).names(&["z", "c", "f"]).bracket(2, 2, &[(0, 1)]).build().expect("valid")
}

/// `hs` with twist `diag(4, 2)`.
pub fn t2(field: Field) -> HomLieSuperalgebra {
    HomLieSuperalgebra::builder(field, 1, 1)
        .names(&["z", "f"])
        .bracket(1, 1, &[(0, 1)])
        .twist_diagonal(&[4, 2])
        .build()
        .expect("valid")
}

/// Basis `{x, y | u, v}` with `[x, y] = 2y`, `[x, v] = 2v`, `[y, u] = 2v` and twist
/// `diag(1, 2, 1, 2)`: the twist of `[x, y] = y, [x, v] = v, [y, u] = v` by one of its
/// automorphisms.
pub fn super22(field: Field) -> HomLieSuperalgebra {
    HomLieSuperalgebra::builder(field, 2, 2)
        .names(&["x", "y", "u", "v"])
        .bracket(0, 1, &[(1, 2)])
        .bracket(0, 3, &[(3, 2)])
        .bracket(1, 2, &[(3, 2)])
        .twist_diagonal(&[1, 2, 1, 2])
        .build()
        .expect("valid")
}

/// Every named corpus algebra over `Q` and `F_3`.
pub fn all() -> Vec<(String, HomLieSuperalgebra)> {
    let f3 = Field::prime(3).expect("prime");
    let mut out = Vec::new();
    for (suffix, f) in [("", Field::Rationals), ("_f3", f3)] {
        out.push((format!("hs{suffix}"), hs(f)));
        out.push((format!("hs2{suffix}"), hs2(f)));
        out.push((format!("t2{suffix}"), t2(f)));
        out.push((format!("super22{suffix}"), super22(f)));
        for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
            out.push((format!("a{p}{q}{suffix}"), abelian(f, p, q)));
        }
    }
    out
}
