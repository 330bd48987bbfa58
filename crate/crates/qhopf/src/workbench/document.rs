//! JSON presentation documents.
//!
//! ```json
//! {
//!   "name": "H2",
//!   "field": "Q",
//!   "dim": 2,
//!   "basis": ["1", "g"],
//!   "mult": [[1, 1, 0, "1"], ...],
//!   ...
//! }
//! ```
//!
//! Sparse tables are lists of `[indices..., scalar]`: `mult` holds
//! `e_i e_j ∋ c e_k` as `[i, j, k, c]`, `coproduct` holds `Δ(e_i) ∋ c e_j ⊗ e_k`
//! as `[i, j, k, c]`, `antipode` holds `S(e_i) ∋ c e_j` as `[i, j, c]`, and
//! `phi`, `phi_inv` hold `[i, j, k, c]`. `unit`, `counit`, `alpha`, `beta`
//! are dense coordinate lists. Scalars use the text grammar of
//! [`crate::exactnum`].

use serde_json::{Map, Value};
use thiserror::Error;

use crate::exactnum::{Field, FieldTag};
use crate::multilinear::{Functional, LinearOperator, StructureConstants, TensorElement};
use crate::qha::{QhaError, QhaPresentation, RawPresentation};

const KEYS: [&str; 13] = [
    "name", "field", "dim", "basis", "mult", "unit", "coproduct", "counit", "phi", "phi_inv", "antipode", "alpha", "beta",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Invalid(#[from] QhaError),
}

fn schema(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Schema { path: path.to_string(), message: message.into() }
}

struct Reader<'a> {
    root: &'a Map<String, Value>,
    dim: usize,
    field: FieldTag,
}

impl<'a> Reader<'a> {
    fn get(&self, key: &str) -> Result<&'a Value, DocumentError> {
        self.root.get(key).ok_or_else(|| schema("$", format!("missing key {key:?}")))
    }

    fn array(&self, key: &str) -> Result<&'a [Value], DocumentError> {
        self.get(key)?.as_array().map(Vec::as_slice).ok_or_else(|| schema(&format!("$.{key}"), "expected an array"))
    }

    fn scalar<F: Field>(&self, v: &Value, path: &str) -> Result<F, DocumentError> {
        let text = v.as_str().ok_or_else(|| schema(path, "expected a scalar string"))?;
        let c: F = text.parse().map_err(|e| schema(path, format!("{e}")))?;
        if c.tag().join(self.field) != self.field {
            return Err(schema(path, format!("scalar {text:?} is outside the declared field {}", self.field)));
        }
        Ok(c)
    }

    fn index(&self, v: &Value, path: &str) -> Result<usize, DocumentError> {
        let i = v.as_u64().ok_or_else(|| schema(path, "expected a basis index"))? as usize;
        if i >= self.dim {
            return Err(schema(path, format!("index {i} out of range for dim {}", self.dim)));
        }
        Ok(i)
    }

    fn coords<F: Field>(&self, key: &str) -> Result<Vec<F>, DocumentError> {
        let items = self.array(key)?;
        if items.len() != self.dim {
            return Err(schema(&format!("$.{key}"), format!("expected {} coordinates, found {}", self.dim, items.len())));
        }
        items.iter().enumerate().map(|(i, v)| self.scalar(v, &format!("$.{key}[{i}]"))).collect()
    }

    /// Entries `[i_1, ..., i_arity, c]`.
    fn entries<F: Field>(&self, key: &str, arity: usize) -> Result<Vec<(Vec<usize>, F)>, DocumentError> {
        let mut out = Vec::new();
        for (n, entry) in self.array(key)?.iter().enumerate() {
            let path = format!("$.{key}[{n}]");
            let parts = entry.as_array().ok_or_else(|| schema(&path, "expected an entry array"))?;
            if parts.len() != arity + 1 {
                return Err(schema(&path, format!("expected {} indices and a scalar", arity)));
            }
            let index = parts[..arity]
                .iter()
                .enumerate()
                .map(|(m, v)| self.index(v, &format!("{path}[{m}]")))
                .collect::<Result<Vec<_>, _>>()?;
            out.push((index, self.scalar(&parts[arity], &format!("{path}[{arity}]"))?));
        }
        Ok(out)
    }
}

/// Parses a document into raw structure constants without checking axioms.
pub fn parse_document<F: Field>(text: &str) -> Result<RawPresentation<F>, DocumentError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| DocumentError::Json { line: e.line(), column: e.column(), message: e.to_string() })?;
    let root = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    if let Some(k) = root.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(&format!("$.{k}"), "unknown key"));
    }
    let mut rd = Reader { root, dim: 0, field: FieldTag::QI };
    let name = rd.get("name")?.as_str().ok_or_else(|| schema("$.name", "expected a string"))?.to_string();
    let field_name = rd.get("field")?.as_str().ok_or_else(|| schema("$.field", "expected a string"))?;
    let field = FieldTag::from_name(field_name).ok_or_else(|| schema("$.field", format!("unknown field {field_name:?}")))?;
    let dim = rd.get("dim")?.as_u64().filter(|&d| d > 0).ok_or_else(|| schema("$.dim", "expected a positive integer"))?
        as usize;
    let labels = rd
        .array("basis")?
        .iter()
        .enumerate()
        .map(|(i, v)| v.as_str().map(str::to_string).ok_or_else(|| schema(&format!("$.basis[{i}]"), "expected a string")))
        .collect::<Result<Vec<_>, _>>()?;
    if labels.len() != dim {
        return Err(schema("$.basis", format!("expected {dim} labels, found {}", labels.len())));
    }
    rd.dim = dim;
    rd.field = field;

    let mult = StructureConstants::from_entries(dim, rd.entries::<F>("mult", 3)?.into_iter().map(|(ix, c)| (ix[0], ix[1], ix[2], c)));
    let mut coproduct = vec![TensorElement::zero(2, dim); dim];
    for (ix, c) in rd.entries::<F>("coproduct", 3)? {
        coproduct[ix[0]].add_at(&ix[1..], c);
    }
    let mut antipode = vec![TensorElement::zero(1, dim); dim];
    for (ix, c) in rd.entries::<F>("antipode", 2)? {
        antipode[ix[0]].add_at(&ix[1..], c);
    }
    let rank3 = |key: &str| rd.entries::<F>(key, 3).map(|e| TensorElement::from_entries(3, dim, e));
    let vector = |key: &str| rd.coords::<F>(key).map(|c| TensorElement::from_coords(&c));
    Ok(RawPresentation {
        name,
        labels,
        mult,
        unit: vector("unit")?,
        coproduct: LinearOperator::new(1, 2, dim, coproduct).map_err(QhaError::from)?,
        counit: Functional::new(rd.coords("counit")?),
        phi: rank3("phi")?,
        phi_inv: rank3("phi_inv")?,
        antipode: LinearOperator::new(1, 1, dim, antipode).map_err(QhaError::from)?,
        alpha: vector("alpha")?,
        beta: vector("beta")?,
    })
}

/// Parses and validates a document.
pub fn import<F: Field>(text: &str) -> Result<QhaPresentation<F>, DocumentError> {
    Ok(QhaPresentation::load(parse_document(text)?)?)
}

fn entry_line<F: Field>(index: &[usize], c: &F) -> String {
    let mut parts: Vec<Value> = index.iter().map(|&i| Value::from(i)).collect();
    parts.push(Value::from(c.to_string()));
    Value::Array(parts).to_string()
}

fn sorted_lines<F: Field>(entries: impl Iterator<Item = (Vec<usize>, F)>) -> Vec<String> {
    let mut entries: Vec<_> = entries.collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    entries.iter().map(|(ix, c)| entry_line(ix, c)).collect()
}

fn coord_lines<F: Field>(coords: &[F]) -> String {
    Value::Array(coords.iter().map(|c| Value::from(c.to_string())).collect()).to_string()
}

fn block(out: &mut String, key: &str, lines: &[String]) {
    if lines.is_empty() {
        out.push_str(&format!("  \"{key}\": []"));
        return;
    }
    out.push_str(&format!("  \"{key}\": [\n"));
    out.push_str(&lines.iter().map(|l| format!("    {l}")).collect::<Vec<_>>().join(",\n"));
    out.push_str("\n  ]");
}

/// Canonical document text: fixed key order, sorted entries, canonical
/// scalars, one entry per line.
pub fn export<F: Field>(h: &QhaPresentation<F>) -> String {
    let raw = h.raw();
    let n = h.dim();
    let rank3 = |t: &TensorElement<F>| sorted_lines(t.iter().map(|(ix, c)| (ix, c.clone())));
    let columns = |op: &LinearOperator<F>| {
        sorted_lines(op.columns().iter().enumerate().flat_map(|(i, col)| {
            col.iter().map(move |(ix, c)| (std::iter::once(i).chain(ix).collect(), c.clone()))
        }))
    };
    let mut fields: Vec<(&str, String)> = vec![
        ("name", Value::from(raw.name.clone()).to_string()),
        ("field", Value::from(h.field_tag().name()).to_string()),
        ("dim", n.to_string()),
        ("basis", Value::from(raw.labels.clone()).to_string()),
    ];
    let mut out = String::from("{\n");
    for (k, v) in fields.drain(..) {
        out.push_str(&format!("  \"{k}\": {v},\n"));
    }
    block(&mut out, "mult", &sorted_lines(raw.mult.entries().map(|(i, j, k, c)| (vec![i, j, k], c.clone()))));
    out.push_str(",\n");
    out.push_str(&format!("  \"unit\": {},\n", coord_lines(&raw.unit.coords())));
    block(&mut out, "coproduct", &columns(&raw.coproduct));
    out.push_str(",\n");
    out.push_str(&format!("  \"counit\": {},\n", coord_lines(raw.counit.coords())));
    block(&mut out, "phi", &rank3(&raw.phi));
    out.push_str(",\n");
    block(&mut out, "phi_inv", &rank3(&raw.phi_inv));
    out.push_str(",\n");
    block(&mut out, "antipode", &columns(&raw.antipode));
    out.push_str(",\n");
    out.push_str(&format!("  \"alpha\": {},\n", coord_lines(&raw.alpha.coords())));
    out.push_str(&format!("  \"beta\": {}\n", coord_lines(&raw.beta.coords())));
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Gaussian, Rational};
    use crate::workbench::catalog;

    const H2_GOLDEN: &str = include_str!("../../fixtures/h2.json");

    #[test]
    fn h2_matches_golden_file() {
        let h = catalog::build("H2").unwrap();
        assert_eq!(export(&h), H2_GOLDEN);
    }

    #[test]
    fn catalog_round_trips() {
        for name in catalog::NAMES {
            let h = catalog::build(name).unwrap();
            let text = export(&h);
            let back: QhaPresentation<Gaussian> = import(&text).unwrap();
            assert_eq!(back, h, "{name}");
            assert_eq!(export(&back), text, "{name}");
        }
    }

    #[test]
    fn rational_documents_import_over_q() {
        let h: QhaPresentation<Rational> = import(H2_GOLDEN).unwrap();
        assert_eq!(h.dim(), 2);
        assert_eq!(h.field_tag(), FieldTag::Q);
    }

    #[test]
    fn fractions_are_canonicalized() {
        let text = H2_GOLDEN.replacen("[0,0,0,\"1\"]", "[0,0,0,\"2/2\"]", 1);
        let text = text.replacen("\"3/4\"", "\"6/8\"", 1);
        assert_ne!(text, H2_GOLDEN);
        let h: QhaPresentation<Gaussian> = import(&text).unwrap();
        assert_eq!(export(&h), H2_GOLDEN);
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad = H2_GOLDEN.replacen("\"3/4\"", "\"1/0\"", 1);
        match import::<Gaussian>(&bad) {
            Err(DocumentError::Schema { path, .. }) => assert!(path == "$.phi[0][3]", "{path}"),
            other => panic!("{other:?}"),
        }
        let bad = H2_GOLDEN.replacen("\"dim\": 2", "\"dim\": 3", 1);
        assert!(matches!(import::<Gaussian>(&bad), Err(DocumentError::Schema { ref path, .. }) if path == "$.basis"));
        let bad = H2_GOLDEN.replacen("\"field\": \"Q\"", "\"field\": \"R\"", 1);
        assert!(matches!(import::<Gaussian>(&bad), Err(DocumentError::Schema { ref path, .. }) if path == "$.field"));
        let bad = H2_GOLDEN.replacen("\"beta\"", "\"gamma\"", 1);
        assert!(matches!(import::<Gaussian>(&bad), Err(DocumentError::Schema { ref path, .. }) if path == "$.gamma"));
        assert!(matches!(import::<Gaussian>("{"), Err(DocumentError::Json { .. })));
    }

    #[test]
    fn declared_field_bounds_scalars() {
        let h = catalog::build("H8+").unwrap();
        let text = export(&h).replacen("\"field\": \"Q(i)\"", "\"field\": \"Q\"", 1);
        assert!(matches!(import::<Gaussian>(&text), Err(DocumentError::Schema { .. })));
    }

    #[test]
    fn axiom_violations_pass_through() {
        let h = catalog::build("H2").unwrap();
        let mut raw = h.into_raw();
        raw.phi = TensorElement::from_entries(3, 2, [(vec![0, 0, 0], Gaussian::from(1))]);
        raw.phi_inv = raw.phi.clone();
        let text = export(&QhaPresentation::unchecked(raw).unwrap());
        assert!(matches!(import::<Gaussian>(&text), Err(DocumentError::Invalid(QhaError::AxiomViolation { .. }))));
        assert!(parse_document::<Gaussian>(&text).is_ok());
    }

    #[test]
    fn double_round_trips() {
        let h = catalog::build("H2").unwrap();
        let d = crate::double::build_double(&h).unwrap();
        let text = export(&d.presentation);
        let back: QhaPresentation<Gaussian> = import(&text).unwrap();
        assert_eq!(back, d.presentation);
        assert_eq!(export(&back), text);
        assert_eq!(export(&crate::double::build_double(&h).unwrap().presentation), text);
    }

    #[test]
    fn schema_file_lists_every_key() {
        let schema: Value = serde_json::from_str(include_str!("../../schema/presentation.schema.json")).unwrap();
        let required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        assert_eq!(required, KEYS);
    }
}
