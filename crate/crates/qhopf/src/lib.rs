//! Exact computations in finite-dimensional quasi-Hopf algebras.
//!
//! The core is generic over a [`exactnum::Field`]; the aliases below fix
//! the scalar to Gaussian rationals, which contain every example shipped
//! in the catalog.

pub mod canonical;
pub mod double;
pub mod exactnum;
pub mod intcoint;
pub mod multilinear;
pub mod qha;
pub mod workbench;

pub use exactnum::{Field, FieldTag, Gaussian, Rational};

pub type Scalar = Gaussian;
pub type Tensor = multilinear::TensorElement<Scalar>;
pub type Operator = multilinear::LinearOperator<Scalar>;
pub type Dual = multilinear::Functional<Scalar>;
pub type Presentation = qha::QhaPresentation<Scalar>;
pub type Report = qha::VerificationReport<Scalar>;
