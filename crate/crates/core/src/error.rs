use thiserror::Error;

use crate::algebra::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::Field, crate::Field),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("subspace is not a Hom-ideal: {0}")]
    NotAnIdeal(String),

    #[error("subspace is not a complement: {0}")]
    NotAComplement(String),

    /// A subspace that should be twist-invariant is not; carries the offending image vector.
    #[error("{what} is not invariant under the twist: image {witness}")]
    NotInvariant { what: String, witness: String },

    #[error("validation failed: {context}")]
    Validation { context: String, report: ValidationReport },

    #[error("map is not invertible: {0}")]
    Singular(String),
}

impl Error {
    pub(crate) fn validation(context: impl Into<String>, report: ValidationReport) -> Self {
        Error::Validation { context: context.into(), report }
    }
}
