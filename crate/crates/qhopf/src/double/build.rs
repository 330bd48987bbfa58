use rustc_hash::FxHashMap;

use crate::exactnum::Field;
use crate::multilinear::{LinearOperator, StructureConstants, TensorElement};
use crate::qha::sweedler::{s, si, Sw};
use crate::qha::{verify_axioms, AxiomScope, QhaError, QhaPresentation, RawPresentation};
use crate::w;

use super::{bowtie, embed_tensor, DoubleError, DoublePresentation};

/// `Ω = X¹₍₁,₁₎y¹x¹ ⊗ X¹₍₁,₂₎y²x²₁ ⊗ X¹₂y³x²₂ ⊗ S⁻¹(f¹X²x³) ⊗ S⁻¹(f²X³)`.
pub fn omega<F: Field>(h: &QhaPresentation<F>) -> Result<TensorElement<F>, DoubleError> {
    let c = h.canonical()?;
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (f1, f2) = sw.put2(&c.f);
    let o5 = sw.word(w![si(w![f2, x3])]);
    let (y1, y2, y3) = sw.put3(h.phi_inv());
    let (z1, z2, z3) = sw.put3(h.phi_inv());
    let o4 = sw.word(w![si(w![f1, x2, z3])]);
    let (x11, x12) = sw.split(x1);
    let (x111, x112) = sw.split(x11);
    let o1 = sw.word(w![x111, y1, z1]);
    let (z21, z22) = sw.split(z2);
    let o2 = sw.word(w![x112, y2, z21]);
    let o3 = sw.word(w![x12, y3, z22]);
    Ok(sw.finish(&[o1, o2, o3, o4, o5]))
}

/// Products `(e^a⋈e_b)(e^c⋈e_d)` as a rank-6 tensor over `H` with legs
/// `[a, b, c, d, k, m]`, the coefficient of `e^k⋈e_m`.
fn product_tensor<F: Field>(h: &QhaPresentation<F>, om: &TensorElement<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let o = sw.put(om);
    let (kl, k) = sw.label();
    let (k1, k2) = sw.split(k);
    let a = sw.word(w![o[4], k1, o[0]]);
    let (bl, b) = sw.label();
    let (b1, b2) = sw.split(b);
    let x = sw.word(w![si(w![b2]), o[3], k2, o[1]]);
    let (b11, b12) = sw.split(b1);
    let c = sw.word(w![x, b11]);
    let m1 = sw.word(w![o[2], b12]);
    let (dl, d) = sw.label();
    let m = sw.word(w![m1, d]);
    sw.finish(&[a, bl, c, dl, kl, m])
}

/// Sums `coefficient · i_D(e_w)(e^k⋈e_h)` per column `(a, b)` from a tensor
/// with legs `[a, b, k, h, w]`.
fn assemble_columns<F: Field>(n: usize, mult: &StructureConstants<F>, eps: &[F], t: &TensorElement<F>) -> Vec<TensorElement<F>> {
    let mut cols = vec![TensorElement::zero(1, n * n); n * n];
    let mut cache: FxHashMap<(usize, usize), Vec<(usize, F)>> = FxHashMap::default();
    for (ix, c) in t.iter() {
        let (a, b, k, hh, wl) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
        let prod = cache.entry((wl, k * n + hh)).or_insert_with(|| left_embedded(n, mult, eps, wl, k * n + hh));
        for (out, v) in prod.iter() {
            cols[a * n + b].add_at(&[*out], c.times(v));
        }
    }
    cols
}

/// `i_D(e_w)·e_j` in `D(H)`.
fn left_embedded<F: Field>(n: usize, mult: &StructureConstants<F>, eps: &[F], wl: usize, j: usize) -> Vec<(usize, F)> {
    let mut acc = vec![F::zero(); n * n];
    for (m, e) in eps.iter().enumerate().filter(|(_, e)| !e.is_zero()) {
        for (k, v) in mult.product(m * n + wl, j) {
            acc[*k] += &e.times(v);
        }
    }
    acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
}

/// `Δ_D(φ⋈h) = (ε⋈X¹Y¹)(p¹₁x¹⇀φ₂↼Y²S⁻¹(p²) ⋈ p¹₂x²h₁) ⊗ (X²₁⇀φ₁↼S⁻¹(X³) ⋈ X²₂Y³x³h₂)`.
fn coproduct_columns<F: Field>(
    h: &QhaPresentation<F>,
    mult: &StructureConstants<F>,
    p_r: &TensorElement<F>,
) -> Vec<TensorElement<F>> {
    let n = h.dim();
    let eps = h.counit().coords().to_vec();
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi());
    let (y1, y2, y3) = sw.put3(h.phi());
    let wl = sw.word(w![x1, y1]);
    let (z1, z2, z3) = sw.put3(h.phi_inv());
    let (p1, p2) = sw.put2(p_r);
    let (x21, x22) = sw.split(x2);
    let (p11, p12) = sw.split(p1);
    let right = sw.word(w![y2, si(w![p2])]);
    let (ll, l) = sw.label();
    let left = sw.word(w![si(w![x3]), l, x21, right]);
    let (kl, k) = sw.label();
    let a = sw.word(w![left, k, p11, z1]);
    let (bl, b) = sw.label();
    let (b1, b2) = sw.split(b);
    let h1 = sw.word(w![p12, z2, b1]);
    let h2 = sw.word(w![x22, y3, z3, b2]);
    let t = sw.finish(&[a, bl, kl, h1, ll, h2, wl]);

    let mut cols = vec![TensorElement::zero(2, n * n); n * n];
    let mut cache: FxHashMap<(usize, usize), Vec<(usize, F)>> = FxHashMap::default();
    for (ix, c) in t.iter() {
        let (a, b, k, hh1, l, hh2, wv) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5], ix[6]);
        let prod = cache.entry((wv, k * n + hh1)).or_insert_with(|| left_embedded(n, mult, &eps, wv, k * n + hh1));
        for (out, v) in prod.iter() {
            cols[a * n + b].add_at(&[*out, l * n + hh2], c.times(v));
        }
    }
    cols
}

/// `S_D(φ⋈h) = (ε⋈S(h)f¹)(p¹₁U¹⇀φ∘S⁻¹↼f²S⁻¹(p²) ⋈ p¹₂U²)`.
fn antipode_columns<F: Field>(
    h: &QhaPresentation<F>,
    mult: &StructureConstants<F>,
    c: &crate::canonical::CanonicalElements<F>,
) -> Vec<TensorElement<F>> {
    let n = h.dim();
    let eps = h.counit().coords().to_vec();
    let mut sw = Sw::new(h);
    let (f1, f2) = sw.put2(&c.f);
    let (p1, p2) = sw.put2(&c.p_r);
    let (u1, u2) = sw.put2(&c.u);
    let (p11, p12) = sw.split(p1);
    let hl = sw.word(w![p12, u2]);
    let (kl, k) = sw.label();
    let a = sw.word(w![si(w![f2, si(w![p2]), k, p11, u1])]);
    let (bl, b) = sw.label();
    let wl = sw.word(w![s(w![b]), f1]);
    let t = sw.finish(&[a, bl, kl, hl, wl]);
    assemble_columns(n, mult, &eps, &t)
}

/// `S_D⁻¹(φ⋈h) = (ε⋈S⁻¹(f²h))(p¹₁S⁻¹(q²g²)⇀φ∘S↼S⁻¹(p²f¹) ⋈ p¹₂S⁻¹(q¹g¹))`.
fn antipode_inverse_columns<F: Field>(
    h: &QhaPresentation<F>,
    mult: &StructureConstants<F>,
    c: &crate::canonical::CanonicalElements<F>,
) -> Vec<TensorElement<F>> {
    let n = h.dim();
    let eps = h.counit().coords().to_vec();
    let mut sw = Sw::new(h);
    let (f1, f2) = sw.put2(&c.f);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_r);
    let (p11, p12) = sw.split(p1);
    let hl = sw.word(w![p12, si(w![q1, g1])]);
    let (kl, k) = sw.label();
    let a = sw.word(w![s(w![si(w![p2, f1]), k, p11, si(w![q2, g2])])]);
    let (bl, b) = sw.label();
    let wl = sw.word(w![si(w![f2, b])]);
    let t = sw.finish(&[a, bl, kl, hl, wl]);
    assemble_columns(n, mult, &eps, &t)
}

/// The closed form of `S_D⁻¹`.
pub fn double_antipode_inverse<F: Field>(d: &DoublePresentation<F>) -> LinearOperator<F> {
    d.antipode_inverse.clone()
}

/// Builds `D(H)` and verifies its axioms (on generators above dimension 16).
pub fn build_double<F: Field>(h: &QhaPresentation<F>) -> Result<DoublePresentation<F>, DoubleError> {
    build_double_with(h, AxiomScope::Auto)
}

pub(crate) fn build_double_with<F: Field>(h: &QhaPresentation<F>, scope: AxiomScope) -> Result<DoublePresentation<F>, DoubleError> {
    let n = h.dim();
    let c = h.canonical().map_err(|e| match e {
        crate::canonical::CanonicalError::Qha(QhaError::SingularAntipode) => DoubleError::SingularAntipode,
        e => e.into(),
    })?;
    let om = omega(h)?;
    let prod = product_tensor(h, &om);
    let mut entries = Vec::with_capacity(prod.len());
    for (ix, v) in prod.iter() {
        entries.push((ix[0] * n + ix[1], ix[2] * n + ix[3], ix[4] * n + ix[5], v.clone()));
    }
    let mult = StructureConstants::from_entries(n * n, entries);
    let eps = h.counit();

    let (coproduct, (antipode, antipode_inv)) = rayon::join(
        || coproduct_columns(h, &mult, &c.p_r),
        || rayon::join(|| antipode_columns(h, &mult, &c), || antipode_inverse_columns(h, &mult, &c)),
    );
    let alpha_d = embed_tensor(n, eps, h.alpha());
    let beta_d = embed_tensor(n, eps, h.beta());
    let sinv_alpha = h.s_inv(h.alpha())?;
    let counit = crate::multilinear::Functional::new(
        (0..n * n).map(|k| eps.at(k % n).times(&sinv_alpha.coord(k / n))).collect(),
    );
    let labels = h
        .labels()
        .iter()
        .flat_map(|a| h.labels().iter().map(move |b| format!("P_{a}⋈{b}")))
        .collect();
    let raw = RawPresentation {
        name: format!("D({})", h.name()),
        labels,
        mult,
        unit: bowtie(n, eps, h.unit()),
        coproduct: LinearOperator::new(1, 2, n * n, coproduct)?,
        counit,
        phi: embed_tensor(n, eps, h.phi()),
        phi_inv: embed_tensor(n, eps, h.phi_inv()),
        antipode: LinearOperator::new(1, 1, n * n, antipode)?,
        alpha: alpha_d,
        beta: beta_d,
    };
    let presentation = QhaPresentation::unchecked(raw)?;
    let axioms = verify_axioms(&presentation, scope);
    if let Some(row) = axioms.failures().next() {
        return Err(DoubleError::AxiomViolation { check: row.name.clone(), witness: row.render_witness() });
    }
    let antipode_inverse = LinearOperator::new(1, 1, n * n, antipode_inv)?;
    Ok(DoublePresentation { presentation, omega: om, antipode_inverse, axioms, base_dim: n, base_counit: eps.clone() })
}
