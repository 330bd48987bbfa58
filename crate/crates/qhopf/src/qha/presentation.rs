use std::sync::Arc;

use crate::exactnum::{Field, FieldTag};
use crate::multilinear::{kernel, Functional, LinearOperator, StructureConstants, TensorElement};

use super::axioms::{verify_axioms, AxiomScope};
use super::memo::Memo;
use super::sweedler::SwTables;
use super::QhaError;

/// Structure constants as supplied by a caller, before validation.
#[derive(Clone, Debug)]
pub struct RawPresentation<F> {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: StructureConstants<F>,
    pub unit: TensorElement<F>,
    pub coproduct: LinearOperator<F>,
    pub counit: Functional<F>,
    pub phi: TensorElement<F>,
    pub phi_inv: TensorElement<F>,
    pub antipode: LinearOperator<F>,
    pub alpha: TensorElement<F>,
    pub beta: TensorElement<F>,
}

/// A finite-dimensional quasi-Hopf algebra given by structure constants.
///
/// Derived data (canonical elements, integrals, ...) is computed lazily and
/// cached per instance.
pub struct QhaPresentation<F> {
    pub(crate) raw: RawPresentation<F>,
    pub(crate) memo: Memo<F>,
}

impl<F: Field> Clone for QhaPresentation<F> {
    fn clone(&self) -> Self {
        QhaPresentation { raw: self.raw.clone(), memo: Memo::default() }
    }
}

impl<F: Field> PartialEq for QhaPresentation<F> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&self.raw, &other.raw);
        a.labels == b.labels
            && a.mult == b.mult
            && a.unit == b.unit
            && a.coproduct == b.coproduct
            && a.counit == b.counit
            && a.phi == b.phi
            && a.phi_inv == b.phi_inv
            && a.antipode == b.antipode
            && a.alpha == b.alpha
            && a.beta == b.beta
    }
}

impl<F: Field> std::fmt::Debug for QhaPresentation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QhaPresentation({}, dim {})", self.raw.name, self.dim())
    }
}

fn check_shapes<F: Field>(raw: &RawPresentation<F>) -> Result<(), QhaError> {
    let n = raw.labels.len();
    let bad = |what: &str| Err(QhaError::Shape(what.to_string()));
    if n == 0 {
        return bad("empty basis");
    }
    if raw.mult.dim() != n {
        return bad("mult dimension");
    }
    for (t, what, rank) in [
        (&raw.unit, "unit", 1),
        (&raw.phi, "phi", 3),
        (&raw.phi_inv, "phi_inv", 3),
        (&raw.alpha, "alpha", 1),
        (&raw.beta, "beta", 1),
    ] {
        if t.dim() != n || t.rank() != rank {
            return bad(what);
        }
    }
    if raw.counit.dim() != n {
        return bad("counit");
    }
    let c = &raw.coproduct;
    if c.dim() != n || c.src_rank() != 1 || c.dst_rank() != 2 {
        return bad("coproduct");
    }
    let s = &raw.antipode;
    if s.dim() != n || s.src_rank() != 1 || s.dst_rank() != 1 {
        return bad("antipode");
    }
    Ok(())
}

impl<F: Field> QhaPresentation<F> {
    /// Normalizes `α`, `β` and checks every axiom.
    pub fn load(raw: RawPresentation<F>) -> Result<QhaPresentation<F>, QhaError> {
        Self::load_with(raw, AxiomScope::Auto)
    }

    pub fn load_with(mut raw: RawPresentation<F>, scope: AxiomScope) -> Result<QhaPresentation<F>, QhaError> {
        check_shapes(&raw)?;
        let ea = raw.counit.eval(&raw.alpha);
        let eb = raw.counit.eval(&raw.beta);
        if ea.times(&eb) != F::one() {
            return Err(QhaError::BadCounitNormalization);
        }
        if !ea.is_one() {
            raw.alpha = raw.alpha.scale(&ea.inv().expect("nonzero"));
            raw.beta = raw.beta.scale(&ea);
        }
        let h = QhaPresentation { raw, memo: Memo::default() };
        let report = verify_axioms(&h, scope);
        if let Some(row) = report.rows.iter().find(|r| !r.passed()) {
            if row.name == "phi_inverse" {
                return Err(QhaError::NonInvertiblePhi);
            }
            return Err(QhaError::AxiomViolation { check: row.name.clone(), witness: row.render_witness() });
        }
        Ok(h)
    }

    /// Wraps raw data without any checks. Intended for verification of
    /// possibly corrupted input.
    pub fn unchecked(raw: RawPresentation<F>) -> Result<QhaPresentation<F>, QhaError> {
        check_shapes(&raw)?;
        Ok(QhaPresentation { raw, memo: Memo::default() })
    }

    pub fn raw(&self) -> &RawPresentation<F> {
        &self.raw
    }

    pub fn into_raw(self) -> RawPresentation<F> {
        self.raw
    }

    pub fn name(&self) -> &str {
        &self.raw.name
    }

    pub fn dim(&self) -> usize {
        self.raw.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.raw.labels
    }

    pub fn mult(&self) -> &StructureConstants<F> {
        &self.raw.mult
    }

    pub fn unit(&self) -> &TensorElement<F> {
        &self.raw.unit
    }

    pub fn coproduct(&self) -> &LinearOperator<F> {
        &self.raw.coproduct
    }

    pub fn counit(&self) -> &Functional<F> {
        &self.raw.counit
    }

    pub fn phi(&self) -> &TensorElement<F> {
        &self.raw.phi
    }

    pub fn phi_inv(&self) -> &TensorElement<F> {
        &self.raw.phi_inv
    }

    pub fn antipode(&self) -> &LinearOperator<F> {
        &self.raw.antipode
    }

    pub fn alpha(&self) -> &TensorElement<F> {
        &self.raw.alpha
    }

    pub fn beta(&self) -> &TensorElement<F> {
        &self.raw.beta
    }

    /// Join of the field tags of every structure constant.
    pub fn field_tag(&self) -> FieldTag {
        let r = &self.raw;
        let mut tag = FieldTag::Q;
        let mut see = |c: &F| tag = tag.join(c.tag());
        r.mult.entries().for_each(|(_, _, _, c)| see(c));
        for t in [&r.unit, &r.phi, &r.phi_inv, &r.alpha, &r.beta] {
            t.iter().for_each(|(_, c)| see(c));
        }
        for op in [&r.coproduct, &r.antipode] {
            op.columns().iter().for_each(|col| col.iter().for_each(|(_, c)| see(c)));
        }
        r.counit.coords().iter().for_each(&mut see);
        tag
    }

    pub fn basis(&self, i: usize) -> TensorElement<F> {
        TensorElement::basis(self.dim(), &[i])
    }

    /// `1 ⊗ … ⊗ 1` with `k` legs.
    pub fn one(&self, k: usize) -> TensorElement<F> {
        let mut t = self.raw.unit.clone();
        for _ in 1..k {
            t = t.tensor_product(&self.raw.unit).expect("same dim");
        }
        t
    }

    pub fn zero(&self, k: usize) -> TensorElement<F> {
        TensorElement::zero(k, self.dim())
    }

    pub fn mul(&self, a: &TensorElement<F>, b: &TensorElement<F>) -> TensorElement<F> {
        a.mult_pointwise(&self.raw.mult, b).expect("matching shapes")
    }

    pub fn delta(&self, a: &TensorElement<F>) -> TensorElement<F> {
        self.raw.coproduct.apply(a)
    }

    pub fn s(&self, a: &TensorElement<F>) -> TensorElement<F> {
        self.raw.antipode.apply(a)
    }

    pub fn eps(&self, a: &TensorElement<F>) -> F {
        self.raw.counit.eval(a)
    }

    /// Applies `S` to each leg.
    pub fn s_all(&self, t: &TensorElement<F>) -> TensorElement<F> {
        t.map_all_legs(&self.raw.antipode)
    }

    /// Composition inverse of the antipode (cached).
    pub fn antipode_inverse(&self) -> Result<Arc<LinearOperator<F>>, QhaError> {
        self.memo
            .antipode_inv
            .get_or_init(|| self.raw.antipode.inverse().map(Arc::new).ok_or(QhaError::SingularAntipode))
            .clone()
    }

    pub fn s_inv(&self, a: &TensorElement<F>) -> Result<TensorElement<F>, QhaError> {
        Ok(self.antipode_inverse()?.apply(a))
    }

    /// `S^k` for any integer `k`.
    pub fn antipode_power(&self, k: i32) -> Result<LinearOperator<F>, QhaError> {
        if k >= 0 {
            Ok(self.raw.antipode.pow(k as u32))
        } else {
            Ok(self.antipode_inverse()?.pow((-k) as u32))
        }
    }

    /// Left multiplication by `a`, as a row-major matrix.
    pub fn left_mult_matrix(&self, a: &TensorElement<F>) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut m = vec![vec![F::zero(); n]; n];
        for j in 0..n {
            for (k, c) in self.mul(a, &self.basis(j)).iter() {
                m[k[0]][j] = c.clone();
            }
        }
        m
    }

    /// Basis indices generating the algebra, chosen greedily in basis order.
    ///
    /// Relies on associativity; identities closed under products are then
    /// checked on these elements only.
    pub fn generators(&self) -> &[usize] {
        self.memo.generators.get_or_init(|| greedy_generators(self))
    }

    pub(crate) fn sw_tables(&self) -> &SwTables<F> {
        self.memo.sw.get_or_init(|| SwTables::new(self))
    }
}

fn span_closure<F: Field>(h: &QhaPresentation<F>, gens: &[usize]) -> usize {
    let n = h.dim();
    let mut span: Vec<Vec<F>> = kernel::row_echelon(&[h.unit().coords()], n);
    loop {
        let mut rows = span.clone();
        for v in &span {
            let vt = TensorElement::from_coords(v);
            for &g in gens {
                rows.push(h.mul(&vt, &h.basis(g)).coords());
            }
        }
        let next = kernel::row_echelon(&rows, n);
        if next.len() == span.len() {
            return span.len();
        }
        span = next;
    }
}

fn greedy_generators<F: Field>(h: &QhaPresentation<F>) -> Vec<usize> {
    let n = h.dim();
    let mut gens = Vec::new();
    let mut reached = span_closure(h, &gens);
    for i in 0..n {
        if reached == n {
            break;
        }
        gens.push(i);
        let r = span_closure(h, &gens);
        if r > reached {
            reached = r;
        } else {
            gens.pop();
        }
    }
    gens
}
