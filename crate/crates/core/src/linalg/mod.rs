//! Exact linear algebra over Q and prime fields.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{vector, Matrix};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
