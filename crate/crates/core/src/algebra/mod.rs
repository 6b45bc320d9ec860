//! Hom-Lie superalgebras given by structure constants, and the constructions on them.

mod axioms;
mod graded;
mod hom_lie;
mod map;
mod report;
mod space;
mod structure;

pub use axioms::AxiomSummary;
pub use graded::{GradedSubspace, Splitting};
pub use hom_lie::{AlgebraBuilder, HomLieSuperalgebra};
pub use map::EvenLinearMap;
pub use report::{Failure, ValidationReport};
pub use space::{Parity, SuperSpace};
pub use structure::Quotient;
