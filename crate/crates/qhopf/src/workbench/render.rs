//! Text and JSON rendering of verification reports.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::exactnum::Field;
use crate::multilinear::TensorElement;
use crate::qha::{Outcome, ReportRow, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<ReportFormat, String> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

const SHOWN_TERMS: usize = 6;

fn sorted_terms<F: Field>(t: &TensorElement<F>) -> Vec<(Vec<usize>, F)> {
    let mut terms: Vec<_> = t.iter().map(|(ix, c)| (ix, c.clone())).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    terms
}

fn witness_text<F: Field>(t: &TensorElement<F>) -> String {
    let terms = sorted_terms(t);
    let mut parts: Vec<String> = terms
        .iter()
        .take(SHOWN_TERMS)
        .map(|(ix, c)| format!("({c})e{}", ix.iter().map(usize::to_string).collect::<Vec<_>>().join("⊗e")))
        .collect();
    if terms.len() > SHOWN_TERMS {
        parts.push(format!("... {} terms", terms.len()));
    }
    parts.join(" + ")
}

fn row_text<F: Field>(row: &ReportRow<F>) -> String {
    let status = if row.passed() { "PASS" } else { "FAIL" };
    let residual = match &row.outcome {
        Outcome::Zero => "zero".to_string(),
        Outcome::Tensor(t) => format!("nonzero({})", witness_text(t)),
        Outcome::Scalar(c) => format!("nonzero({c})"),
        Outcome::Error(e) => format!("error({e})"),
    };
    match &row.detail {
        Some(d) if row.passed() => format!("{status} {}  {residual}  [{d}]", row.name),
        _ => format!("{status} {}  {residual}", row.name),
    }
}

pub fn render_text<F: Field>(reports: &[VerificationReport<F>]) -> String {
    let mut out = String::new();
    let (mut rows, mut failed) = (0, 0);
    for rep in reports {
        out.push_str(&format!("== {} ==\n", rep.title));
        for row in &rep.rows {
            out.push_str(&row_text(row));
            out.push('\n');
        }
        rows += rep.rows.len();
        failed += rep.failures().count();
    }
    out.push_str(&format!("{rows} rows, {failed} failed\n"));
    out
}

fn row_json<F: Field>(row: &ReportRow<F>) -> Value {
    let (residual, witness) = match &row.outcome {
        Outcome::Zero => ("zero", Value::Null),
        Outcome::Tensor(t) => {
            let entries = sorted_terms(t)
                .into_iter()
                .map(|(ix, c)| {
                    let mut e: Vec<Value> = ix.into_iter().map(Value::from).collect();
                    e.push(Value::from(c.to_string()));
                    Value::Array(e)
                })
                .collect();
            ("nonzero", json!({ "rank": t.rank(), "dim": t.dim(), "entries": Value::Array(entries) }))
        }
        Outcome::Scalar(c) => ("nonzero", json!({ "scalar": c.to_string() })),
        Outcome::Error(e) => ("error", json!({ "message": e })),
    };
    json!({
        "name": row.name,
        "status": if row.passed() { "pass" } else { "fail" },
        "residual": residual,
        "witness": witness,
        "detail": row.detail,
    })
}

pub fn render_json<F: Field>(reports: &[VerificationReport<F>]) -> String {
    let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    let doc = json!({
        "passed": failed == 0,
        "rows": rows,
        "failed": failed,
        "reports": reports.iter().map(|r| json!({
            "title": r.title,
            "rows": r.rows.iter().map(row_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

pub fn render<F: Field>(reports: &[VerificationReport<F>], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_text(reports),
        ReportFormat::Json => render_json(reports),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn sample() -> VerificationReport<Rational> {
        let mut rep = VerificationReport::new("sample");
        let one = TensorElement::from_coords(&[Rational::from(1), Rational::from(0)]);
        rep.push(ReportRow::compare("same", &one, &one));
        rep.push(ReportRow::compare("differs", &one, &one.scale(&Rational::from(3))));
        rep
    }

    #[test]
    fn text_marks_each_row() {
        let text = render_text(&[sample()]);
        assert!(text.contains("PASS same  zero"));
        assert!(text.contains("FAIL differs  nonzero((-2)e0)"));
        assert!(text.ends_with("2 rows, 1 failed\n"));
    }

    #[test]
    fn json_lists_witnesses() {
        let v: Value = serde_json::from_str(&render_json(&[sample()])).unwrap();
        assert_eq!(v["passed"], false);
        assert_eq!(v["failed"], 1);
        let rows = &v["reports"][0]["rows"];
        assert_eq!(rows[0]["residual"], "zero");
        assert_eq!(rows[1]["witness"]["entries"][0], json!([0, "-2"]));
    }
}
