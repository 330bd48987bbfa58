//! Canonical elements of a quasi-Hopf algebra and a registry of identities
//! relating them.

#[allow(non_snake_case)]
mod elements;
mod registry;

use thiserror::Error;

use crate::exactnum::Field;
use crate::multilinear::{MultilinearError, TensorElement};
use crate::qha::{QhaError, QhaPresentation, ReportRow, Variant, VerificationReport};

pub use elements::{delta_first, delta_second, gamma_first, gamma_second, CanonicalElements};
pub use registry::{registry, Arg, Identity, Needs};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("internal identity failed: {0}")]
    InternalIdentityFailure(String),
    #[error("Drinfeld twist is not invertible")]
    TwistNotInvertible,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("missing prerequisite: {0}")]
    Prerequisite(String),
    #[error(transparent)]
    Qha(#[from] QhaError),
    #[error(transparent)]
    Multilinear(#[from] MultilinearError),
}

/// Evaluates one registered identity. Pair identities on algebras larger
/// than dimension 8 run on 16 sampled basis pairs unless `exhaustive` is set.
pub fn check_identity<F: Field>(
    h: &QhaPresentation<F>,
    name: &str,
    exhaustive: bool,
) -> Result<ReportRow<F>, CanonicalError> {
    let id = registry::<F>()
        .into_iter()
        .find(|i| i.name == name)
        .ok_or_else(|| CanonicalError::UnknownIdentity(name.to_string()))?;
    Ok(id.evaluate(h, exhaustive))
}

/// Every registered identity plus the two-formula and coopposite checks.
pub fn identity_suite<F: Field>(h: &QhaPresentation<F>, exhaustive: bool) -> VerificationReport<F> {
    let mut report = VerificationReport::new(format!("canonical identities of {}", h.name()));
    report.push(ReportRow::compare("gamma_two_formulas", &gamma_first(h), &gamma_second(h)));
    report.push(ReportRow::compare("delta_two_formulas", &delta_first(h), &delta_second(h)));
    for id in registry::<F>() {
        report.push(id.evaluate(h, exhaustive));
    }
    match cop_rows(h) {
        Ok(rows) => rows.into_iter().for_each(|r| report.push(r)),
        Err(e) => report.push(ReportRow::error("coopposite", e.to_string())),
    }
    report
}

fn both_inverse<F: Field>(h: &QhaPresentation<F>, t: &TensorElement<F>) -> Result<TensorElement<F>, CanonicalError> {
    let sinv = h.antipode_inverse()?;
    Ok(t.apply_on_leg(&sinv, 0)?.apply_on_leg(&sinv, 1)?)
}

fn swapped<F: Field>(t: &TensorElement<F>) -> TensorElement<F> {
    t.permute_legs(&[1, 0])
}

/// Canonical elements of `H^cop` computed from its own presentation against
/// their closed forms in terms of `H`.
fn cop_rows<F: Field>(h: &QhaPresentation<F>) -> Result<Vec<ReportRow<F>>, CanonicalError> {
    let c = h.canonical()?;
    let cop = h.variant(Variant::Cop)?;
    let cc = cop.canonical()?;
    Ok(vec![
        ReportRow::compare("cop_gamma", &cc.gamma, &both_inverse(h, &c.gamma)?),
        ReportRow::compare("cop_twist", &cc.f, &both_inverse(h, &c.f)?),
        ReportRow::compare("cop_p_right", &cc.p_r, &swapped(&c.p_l)),
        ReportRow::compare("cop_q_right", &cc.q_r, &swapped(&c.q_l)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::catalog;

    #[test]
    fn suite_passes_on_catalog() {
        for name in catalog::NAMES {
            let h = catalog::build(name).unwrap();
            let report = identity_suite(&h, false);
            let failed: Vec<_> = report.failures().map(|r| format!("{}: {:?}", r.name, r.detail)).collect();
            assert!(failed.is_empty(), "{name}: {failed:#?}");
            assert!(report.rows.len() >= 35);
        }
    }

    #[test]
    fn unknown_identity_is_reported() {
        let h = catalog::h2::<crate::exactnum::Rational>();
        assert!(matches!(check_identity(&h, "no_such_identity", false), Err(CanonicalError::UnknownIdentity(_))));
    }

    #[test]
    fn right_integral_u_on_h8() {
        let h = catalog::h8(catalog::Sign::Plus);
        assert!(check_identity(&h, "right_integral_u", false).unwrap().passed());
    }

    #[test]
    fn swapped_alpha_beta_is_caught() {
        let mut raw = catalog::h8_raw(catalog::Sign::Plus);
        std::mem::swap(&mut raw.alpha, &mut raw.beta);
        let h = QhaPresentation::unchecked(raw).unwrap();
        assert!(!identity_suite(&h, false).all_passed());
    }
}
