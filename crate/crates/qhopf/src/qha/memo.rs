use std::sync::{Arc, OnceLock};

use crate::canonical::{CanonicalElements, CanonicalError};
use crate::intcoint::{CointegralData, IntegralData, IntegralError};
use crate::multilinear::LinearOperator;

use super::sweedler::SwTables;
use super::QhaError;

/// Lazily computed data attached to one presentation.
pub(crate) struct Memo<F> {
    pub antipode_inv: OnceLock<Result<Arc<LinearOperator<F>>, QhaError>>,
    pub generators: OnceLock<Vec<usize>>,
    pub sw: OnceLock<SwTables<F>>,
    pub canonical: OnceLock<Result<Arc<CanonicalElements<F>>, CanonicalError>>,
    pub integrals: OnceLock<Result<Arc<IntegralData<F>>, IntegralError>>,
    pub cointegrals: OnceLock<Result<Arc<CointegralData<F>>, IntegralError>>,
}

impl<F> Default for Memo<F> {
    fn default() -> Self {
        Memo {
            antipode_inv: OnceLock::new(), generators: OnceLock::new(), sw: OnceLock::new(),
            canonical: OnceLock::new(),
            integrals: OnceLock::new(),
            cointegrals: OnceLock::new(),
        }
    }
}
