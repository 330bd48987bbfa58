use crate::exactnum::Field;
use crate::multilinear::{Functional, LinearOperator, TensorElement};
use crate::qha::sweedler::{s, si, sp, Sw};
use crate::qha::QhaPresentation;
use crate::w;

use super::{IntegralData, IntegralError};

/// `g = λ(S⁻¹(q²t₂p²))S⁻¹(q¹t₁p¹)` and `g⁻¹ = λ(q¹t₁p¹)S(q²t₂p²)`, for
/// `λ(S⁻¹(t)) = 1`.
pub fn modular_element_g<F: Field>(
    h: &QhaPresentation<F>,
    lambda: &Functional<F>,
    t: &TensorElement<F>,
) -> Result<(TensorElement<F>, TensorElement<F>), IntegralError> {
    let c = h.canonical()?;
    let mut sw = Sw::new(h);
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_r);
    let tl = sw.put1(t);
    let (t1, t2) = sw.split(tl);
    sw.scalar(lambda, w![si(w![q2, t2, p2])]);
    let out = sw.word(w![si(w![q1, t1, p1])]);
    let g = sw.finish(&[out]);

    let mut sw = Sw::new(h);
    let (q1, q2) = sw.put2(&c.q_r);
    let (p1, p2) = sw.put2(&c.p_r);
    let tl = sw.put1(t);
    let (t1, t2) = sw.split(tl);
    sw.scalar(lambda, w![q1, t1, p1]);
    let out = sw.word(w![s(w![q2, t2, p2])]);
    Ok((g, sw.finish(&[out])))
}

/// `u = μ(V¹)S²(V²)` and `u⁻¹ = μ⁻¹(q¹₂g²S(q²))S(q¹₁g¹)` with `f⁻¹ = g¹⊗g²`.
pub(crate) fn u_elements<F: Field>(
    h: &QhaPresentation<F>,
    ints: &IntegralData<F>,
) -> Result<(TensorElement<F>, TensorElement<F>), IntegralError> {
    let c = h.canonical()?;
    let mut sw = Sw::new(h);
    let (v1, v2) = sw.put2(&c.v);
    sw.scalar(&ints.mu, w![v1]);
    let out = sw.word(w![sp(2, w![v2])]);
    let u = sw.finish(&[out]);

    let mut sw = Sw::new(h);
    let (q1, q2) = sw.put2(&c.q_r);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (q11, q12) = sw.split(q1);
    sw.scalar(&ints.mu_inv, w![q12, g2, s(w![q2])]);
    let out = sw.word(w![s(w![q11, g1])]);
    Ok((u, sw.finish(&[out])))
}

/// `v = (μ⁻¹(g)μ(β))⁻¹μ(S(p²)f¹)S(p¹)f²` and
/// `v⁻¹ = μ⁻¹(g)μ(βq²g¹S(q¹₂))g²S(q¹₁)`, where the bare `g` is the modular
/// element and `g¹⊗g² = f⁻¹`.
pub(crate) fn v_elements<F: Field>(
    h: &QhaPresentation<F>,
    ints: &IntegralData<F>,
    modular: &TensorElement<F>,
) -> Result<(TensorElement<F>, TensorElement<F>), IntegralError> {
    let c = h.canonical()?;
    let scale = ints.mu_inv.eval(modular).times(&ints.mu.eval(h.beta()));
    let inv = scale
        .inv()
        .map_err(|_| IntegralError::DegeneratePairing("μ⁻¹(g)μ(β) = 0".into()))?;

    let mut sw = Sw::new(h);
    let (p1, p2) = sw.put2(&c.p_r);
    let (f1, f2) = sw.put2(&c.f);
    sw.scalar(&ints.mu, w![s(w![p2]), f1]);
    let out = sw.word(w![s(w![p1]), f2]);
    let v = sw.finish(&[out]).scale(&inv);

    let mut sw = Sw::new(h);
    let (q1, q2) = sw.put2(&c.q_r);
    let (g1, g2) = sw.put2(&c.f_inv);
    let (q11, q12) = sw.split(q1);
    sw.scalar(&ints.mu, w![h.beta(), q2, g1, s(w![q12])]);
    let out = sw.word(w![g2, s(w![q11])]);
    let v_inv = sw.finish(&[out]).scale(&ints.mu_inv.eval(modular));
    Ok((v, v_inv))
}

/// `d = μ⁻¹(p̃¹)S⁻²(p̃²)`.
pub(crate) fn d_element<F: Field>(h: &QhaPresentation<F>, mu_inv: &Functional<F>) -> Result<TensorElement<F>, IntegralError> {
    let c = h.canonical()?;
    let mut sw = Sw::new(h);
    let (a, b) = sw.put2(&c.p_l);
    sw.scalar(mu_inv, w![a]);
    let out = sw.word(w![sp(-2, w![b])]);
    Ok(sw.finish(&[out]))
}

/// `S_μ(h) = S(h)↼μ = μ(S(h)₁)S(h)₂`.
pub fn s_mu<F: Field>(h: &QhaPresentation<F>, mu: &Functional<F>) -> LinearOperator<F> {
    let cols = (0..h.dim())
        .map(|i| h.delta(&h.s(&h.basis(i))).contract(mu, 0).expect("rank 2"))
        .collect();
    LinearOperator::new(1, 1, h.dim(), cols).expect("shape")
}
