//! Quasi-Hopf algebras by structure constants: validation, variants,
//! coproduct plans and the actions of `H` on `H*`.

mod actions;
pub mod axioms;
pub(crate) mod memo;
mod presentation;
pub mod report;
pub mod sweedler;
mod variant;

use thiserror::Error;

use crate::multilinear::MultilinearError;

pub use actions::{convolve, iterated_coproduct, lhit, lhit_elem, rhit, rhit_elem, two_sided_hit, Bracket};
pub use axioms::{verify_axioms, AxiomScope};
pub use presentation::{QhaPresentation, RawPresentation};
pub use report::{Outcome, ReportRow, VerificationReport};
pub use variant::Variant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QhaError {
    #[error("axiom {check} fails: {witness}")]
    AxiomViolation { check: String, witness: String },
    #[error("reassociator and its claimed inverse do not multiply to 1")]
    NonInvertiblePhi,
    #[error("ε(α)ε(β) ≠ 1")]
    BadCounitNormalization,
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("malformed presentation: {0}")]
    Shape(String),
    #[error("invalid coproduct plan: {0}")]
    BadPlan(String),
    #[error(transparent)]
    Multilinear(#[from] MultilinearError),
}
