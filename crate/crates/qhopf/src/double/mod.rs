//! The quantum double `D(H)` of a finite-dimensional quasi-Hopf algebra.
//!
//! The underlying space is `H*⊗H` with basis `e^i⋈e_j` stored at index
//! `i·n + j` (dual index major). Functionals on `D(H)` use the same index,
//! read through `D(H)* ≅ H⊗H*`.

mod analysis;
mod build;

use thiserror::Error;

use crate::canonical::CanonicalError;
use crate::exactnum::Field;
use crate::intcoint::IntegralError;
use crate::multilinear::{Functional, LinearOperator, MultilinearError, TensorElement};
use crate::qha::{QhaError, QhaPresentation, VerificationReport};

pub use analysis::{
    double_cointegrals, double_integral, double_modular, double_suite, embedding_rows, semisimplicity_check,
    DoubleCointegrals, DoubleModular, Semisimplicity,
};
pub use build::{build_double, double_antipode_inverse, omega};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleError {
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("double violates `{check}`: {witness}")]
    AxiomViolation { check: String, witness: String },
    #[error("cross-check failed: {0}")]
    CrossCheckMismatch(String),
    #[error("formulas disagree: {0}")]
    FormulaMismatch(String),
    #[error(transparent)]
    Qha(#[from] QhaError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
    #[error(transparent)]
    Multilinear(#[from] MultilinearError),
}

/// `D(H)` together with the data it was built from.
pub struct DoublePresentation<F> {
    pub presentation: QhaPresentation<F>,
    /// `Ω ∈ H^{⊗5}` driving the multiplication.
    pub omega: TensorElement<F>,
    /// `S_D⁻¹` from its closed form.
    pub antipode_inverse: LinearOperator<F>,
    /// Axiom rows evaluated when the double was built.
    pub axioms: VerificationReport<F>,
    base_dim: usize,
    base_counit: Functional<F>,
}

impl<F: Field> DoublePresentation<F> {
    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn index(&self, dual: usize, elem: usize) -> usize {
        dual * self.base_dim + elem
    }

    /// `φ⋈h`.
    pub fn bowtie(&self, phi: &Functional<F>, h: &TensorElement<F>) -> TensorElement<F> {
        bowtie(self.base_dim, phi, h)
    }

    /// `i_D(h) = ε⋈h`.
    pub fn embed(&self, h: &TensorElement<F>) -> TensorElement<F> {
        self.bowtie(&self.base_counit, h)
    }

    /// `i_D` applied to every leg of a tensor over `H`.
    pub fn embed_tensor(&self, t: &TensorElement<F>) -> TensorElement<F> {
        embed_tensor(self.base_dim, &self.base_counit, t)
    }

    /// The functional `x⊗φ ∈ H⊗H*`, acting as `ψ⋈h ↦ ψ(x)φ(h)`.
    pub fn dual_pair(&self, x: &TensorElement<F>, phi: &Functional<F>) -> Functional<F> {
        let n = self.base_dim;
        Functional::new((0..n * n).map(|k| x.coord(k / n).times(&phi.at(k % n))).collect())
    }
}

pub(crate) fn bowtie<F: Field>(n: usize, phi: &Functional<F>, h: &TensorElement<F>) -> TensorElement<F> {
    let mut out = TensorElement::zero(1, n * n);
    for (i, a) in phi.coords().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (ix, c) in h.iter() {
            out.add_at(&[i * n + ix[0]], a.times(c));
        }
    }
    out
}

pub(crate) fn embed_tensor<F: Field>(n: usize, eps: &Functional<F>, t: &TensorElement<F>) -> TensorElement<F> {
    let support: Vec<(usize, &F)> = eps.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let mut out = TensorElement::zero(t.rank(), n * n);
    for (ix, c) in t.iter() {
        let mut stack: Vec<(Vec<usize>, F)> = vec![(Vec::new(), c.clone())];
        for &j in &ix {
            stack = stack
                .into_iter()
                .flat_map(|(pre, v)| {
                    support.iter().map(move |&(m, e)| {
                        let mut p = pre.clone();
                        p.push(m * n + j);
                        (p, v.times(e))
                    })
                })
                .collect();
        }
        for (p, v) in stack {
            out.add_at(&p, v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::identity_suite;
    use crate::exactnum::Gaussian;
    use crate::workbench::catalog;

    fn dual(h: &QhaPresentation<Gaussian>, label: &str) -> Functional<Gaussian> {
        let i = h.labels().iter().position(|l| l == label).unwrap();
        Functional::dual_basis(h.dim(), i)
    }

    #[test]
    fn double_of_h2() {
        let h = catalog::h2::<Gaussian>();
        let (d, rep) = double_suite(&h).unwrap();
        assert_eq!(d.presentation.dim(), 4);
        assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        let (integral, _) = double_integral(&h, &d).unwrap();
        let one_plus_g = h.unit().add(&h.basis(1)).unwrap();
        let expected = d.bowtie(&dual(&h, "g"), &one_plus_g);
        assert!(analysis::proportional(&integral.coords(), &expected.coords()));
        let (g_d, _) = double_modular(&h, &d).unwrap();
        assert_eq!(&g_d.first, d.presentation.unit());
        let (verdict, _) = semisimplicity_check(&h, &d, &integral).unwrap();
        assert!(verdict.semisimple);
        assert_eq!(verdict.counit_of_right_integral, Gaussian::from(2));
        assert_eq!(verdict.normalized_cointegral, Gaussian::from(1));
    }

    #[test]
    fn double_of_hopf_baseline() {
        let h = catalog::kz2::<Gaussian>();
        let d = build_double(&h).unwrap();
        assert_eq!(&d.antipode_inverse, d.presentation.antipode());
        let ints = h.integrals().unwrap();
        let co = h.cointegrals().unwrap();
        let (cos, _) = double_cointegrals(&h, &d).unwrap();
        assert_eq!(cos.left, d.dual_pair(&ints.right, &co.left));
        let (g_d, _) = double_modular(&h, &d).unwrap();
        assert_eq!(&g_d.second, d.presentation.unit());
    }

    #[test]
    fn identity_suite_on_double_of_h2() {
        let h = catalog::h2::<Gaussian>();
        let d = build_double(&h).unwrap();
        let rep = identity_suite(&d.presentation, false);
        assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
    }
}
