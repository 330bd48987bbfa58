//! Integrals, cointegrals, modular data and Frobenius systems.

#[allow(non_snake_case)]
mod cointegrals;
mod frobenius;
mod integrals;
mod modular;
mod suites;

use thiserror::Error;

use crate::canonical::CanonicalError;
use crate::multilinear::MultilinearError;
use crate::qha::QhaError;

pub use cointegrals::{cointegral_space, CointegralData};
pub(crate) use frobenius::sandwich;
pub use frobenius::{frobenius_system, xi_operator, FrobeniusKind, FrobeniusSystem};
pub use integrals::{integral_space, IntegralData};
pub use modular::{modular_element_g, s_mu};
pub use suites::{
    antipode_on_integrals, characterization_suite, comparison_suite, dual_coactions, frobenius_suite, s4_suite,
    DualCoactions,
};

/// Left or right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegralError {
    #[error("space of {what} has dimension {found}, expected 1")]
    DimensionNotOne { what: String, found: usize },
    #[error("cross-check failed: {0}")]
    CrossCheckMismatch(String),
    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),
    #[error("Frobenius check failed: {0}")]
    FrobeniusCheckFailed(String),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(transparent)]
    Qha(#[from] QhaError),
    #[error(transparent)]
    Multilinear(#[from] MultilinearError),
}
