//! Isoclinism witnesses, stem decompositions and decision procedures.

mod decide;
mod search;
mod stem;
mod witness;

pub use decide::{isoclinic_decide, Decision, Verdict};
pub use search::{iso_search, Fingerprint, SearchOptions, SearchOutcome, DEFAULT_BUDGET};
pub use stem::{stem_decompose, StemDecomposition};
pub use witness::{
    isoclinism_abelian_sum, isoclinism_quotient, verify_isoclinism, witness_from_map, Frame, IsoclinismWitness,
    QuotientIsoclinism, DERIVED_CONVENTION, QUOTIENT_CONVENTION,
};
