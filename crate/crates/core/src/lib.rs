//! Exact computations with finite-dimensional Hom-Lie superalgebras: axioms, quotients,
//! factor sets and central extensions, and isoclinism.

pub mod algebra;
pub mod corpus;
mod error;
pub mod factor_set;
pub mod format;
pub mod isoclinism;
pub mod linalg;

pub use algebra::{EvenLinearMap, GradedSubspace, HomLieSuperalgebra, Parity, SuperSpace, ValidationReport};
pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, Subspace};
