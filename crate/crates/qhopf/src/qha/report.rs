use crate::exactnum::Field;
use crate::multilinear::TensorElement;

/// Result of evaluating one named check.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome<F> {
    Zero,
    Tensor(TensorElement<F>),
    Scalar(F),
    /// The check could not be evaluated (missing prerequisite).
    Error(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow<F> {
    pub name: String,
    pub outcome: Outcome<F>,
    pub detail: Option<String>,
}

impl<F: Field> ReportRow<F> {
    pub fn compare(name: &str, lhs: &TensorElement<F>, rhs: &TensorElement<F>) -> ReportRow<F> {
        let outcome = match lhs.sub(rhs) {
            Ok(r) if r.is_zero() => Outcome::Zero,
            Ok(r) => Outcome::Tensor(r),
            Err(e) => Outcome::Error(e.to_string()),
        };
        ReportRow { name: name.to_string(), outcome, detail: None }
    }

    pub fn scalar(name: &str, lhs: &F, rhs: &F) -> ReportRow<F> {
        let d = lhs.clone() - rhs;
        let outcome = if d.is_zero() { Outcome::Zero } else { Outcome::Scalar(d) };
        ReportRow { name: name.to_string(), outcome, detail: None }
    }

    /// A yes/no condition; failure carries no residual tensor.
    pub fn check(name: &str, ok: bool, detail: impl Into<String>) -> ReportRow<F> {
        let detail = detail.into();
        let outcome = if ok { Outcome::Zero } else { Outcome::Error(detail.clone()) };
        ReportRow { name: name.to_string(), outcome, detail: Some(detail) }
    }

    pub fn error(name: &str, message: impl Into<String>) -> ReportRow<F> {
        ReportRow { name: name.to_string(), outcome: Outcome::Error(message.into()), detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> ReportRow<F> {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Zero)
    }

    /// `"zero"` or `"nonzero(<witness>)"`.
    pub fn render_witness(&self) -> String {
        match &self.outcome {
            Outcome::Zero => "zero".to_string(),
            Outcome::Tensor(t) => format!("nonzero({t:?})"),
            Outcome::Scalar(c) => format!("nonzero({c})"),
            Outcome::Error(e) => format!("error({e})"),
        }
    }
}

/// Ordered list of named checks.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport<F> {
    pub title: String,
    pub rows: Vec<ReportRow<F>>,
}

impl<F: Field> VerificationReport<F> {
    pub fn new(title: impl Into<String>) -> VerificationReport<F> {
        VerificationReport { title: title.into(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: ReportRow<F>) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: VerificationReport<F>) {
        self.rows.extend(other.rows);
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow<F>> {
        self.rows.iter().filter(|r| !r.passed())
    }

    pub fn row(&self, name: &str) -> Option<&ReportRow<F>> {
        self.rows.iter().find(|r| r.name == name)
    }
}
