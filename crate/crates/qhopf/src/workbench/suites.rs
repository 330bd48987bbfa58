//! Named groups of checks, as selected by `verify --suite`.

use std::str::FromStr;

use crate::canonical::identity_suite;
use crate::double::double_suite;
use crate::exactnum::Field;
use crate::intcoint::{
    antipode_on_integrals, characterization_suite, cointegral_space, comparison_suite, dual_coactions, frobenius_suite,
    integral_space, s4_suite, IntegralError, Side,
};
use crate::qha::{verify_axioms, AxiomScope, QhaPresentation, ReportRow, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Canonical,
    Integrals,
    Double,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "canonical" => Ok(Suite::Canonical),
            "integrals" => Ok(Suite::Integrals),
            "double" => Ok(Suite::Double),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

fn or_error<F: Field>(title: &str, r: Result<VerificationReport<F>, IntegralError>) -> VerificationReport<F> {
    r.unwrap_or_else(|e| {
        let mut rep = VerificationReport::new(title);
        rep.push(ReportRow::error(title, e.to_string()));
        rep
    })
}

fn dimension_row<F: Field>(name: &str, found: usize) -> ReportRow<F> {
    ReportRow::check(name, found == 1, format!("dimension {found}"))
}

/// Integral and cointegral spaces, modular data, Frobenius systems and the
/// antipode power laws.
pub fn integral_reports<F: Field>(h: &QhaPresentation<F>) -> Vec<VerificationReport<F>> {
    let mut spaces = VerificationReport::new(format!("integral spaces of {}", h.name()));
    spaces.push(dimension_row("left_integral_line", integral_space(h, Side::Left).len()));
    spaces.push(dimension_row("right_integral_line", integral_space(h, Side::Right).len()));
    for side in [Side::Left, Side::Right] {
        let name = format!("{}_cointegral_line", side.name());
        spaces.push(match cointegral_space(h, side) {
            Ok(space) => dimension_row(&name, space.len()),
            Err(e) => ReportRow::error(&name, e.to_string()),
        });
    }
    vec![
        spaces,
        or_error("cointegral characterizations", characterization_suite(h)),
        or_error("modular comparisons", comparison_suite(h)),
        or_error("Frobenius systems", frobenius_suite(h)),
        or_error("antipode on integrals", antipode_on_integrals(h)),
        or_error("fourth power of the antipode", s4_suite(h)),
        or_error("dual coactions", dual_coactions(h).map(|(_, rep)| rep)),
    ]
}

pub fn double_reports<F: Field>(h: &QhaPresentation<F>) -> Vec<VerificationReport<F>> {
    match double_suite(h) {
        Ok((_, rep)) => vec![rep],
        Err(e) => {
            let mut rep = VerificationReport::new(format!("quantum double of {}", h.name()));
            rep.push(ReportRow::error("double_construction", e.to_string()));
            vec![rep]
        }
    }
}

/// Runs the selected suite. Every suite but `axioms` presupposes the
/// axioms; when they fail the remaining suites are reported as skipped.
pub fn run_suite<F: Field>(h: &QhaPresentation<F>, suite: Suite, exhaustive: bool) -> Vec<VerificationReport<F>> {
    let axioms = verify_axioms(h, AxiomScope::Auto);
    let valid = axioms.all_passed();
    let mut out = Vec::new();
    if matches!(suite, Suite::Axioms | Suite::All) || !valid {
        out.push(axioms);
    }
    let selected: Vec<Suite> = match suite {
        Suite::All => vec![Suite::Canonical, Suite::Integrals, Suite::Double],
        Suite::Axioms => vec![],
        one => vec![one],
    };
    for s in selected {
        if !valid {
            let mut rep = VerificationReport::new(format!("{s:?} suite"));
            rep.push(ReportRow::error("skipped", "axioms fail"));
            out.push(rep);
            continue;
        }
        match s {
            Suite::Canonical => out.push(identity_suite(h, exhaustive)),
            Suite::Integrals => out.extend(integral_reports(h)),
            Suite::Double => out.extend(double_reports(h)),
            Suite::Axioms | Suite::All => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::TensorElement;
    use crate::workbench::catalog;

    fn rows<F: Field>(reports: &[VerificationReport<F>]) -> usize {
        reports.iter().map(|r| r.rows.len()).sum()
    }

    #[test]
    fn integrals_pass_on_catalog() {
        for name in catalog::NAMES {
            let h = catalog::build(name).unwrap();
            let reports = integral_reports(&h);
            for rep in &reports {
                assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn all_on_h2_passes() {
        let h = catalog::build("H2").unwrap();
        let reports = run_suite(&h, Suite::All, false);
        assert!(reports.iter().all(|r| r.all_passed()));
        assert!(rows(&reports) >= 60);
    }

    #[test]
    fn broken_axioms_skip_the_rest() {
        let mut raw = catalog::build("H2").unwrap().into_raw();
        raw.phi = TensorElement::from_entries(3, 2, [(vec![0, 0, 0], crate::Gaussian::from(1))]);
        raw.phi_inv = raw.phi.clone();
        let h = QhaPresentation::unchecked(raw).unwrap();
        let reports = run_suite(&h, Suite::Canonical, false);
        assert_eq!(reports.len(), 2);
        assert!(!reports[0].all_passed());
        assert_eq!(reports[1].rows[0].name, "skipped");
    }
}
