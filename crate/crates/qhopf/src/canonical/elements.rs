use std::sync::Arc;

use crate::exactnum::Field;
use crate::multilinear::TensorElement;
use crate::qha::sweedler::{s, si, Sw};
use crate::qha::QhaPresentation;
use crate::w;

use super::CanonicalError;

/// `γ`, `δ`, the Drinfeld twist and the elements built from it.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalElements<F> {
    pub gamma: TensorElement<F>,
    pub delta: TensorElement<F>,
    pub f: TensorElement<F>,
    pub f_inv: TensorElement<F>,
    pub p_r: TensorElement<F>,
    pub q_r: TensorElement<F>,
    pub p_l: TensorElement<F>,
    pub q_l: TensorElement<F>,
    pub u: TensorElement<F>,
    pub v: TensorElement<F>,
}

/// `γ = S(x¹X²)αx²X³₁ ⊗ S(X¹)αx³X³₂`.
pub fn gamma_first<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let alpha = h.alpha();
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let (X1, X2, X3) = sw.put3(h.phi());
    let (X31, X32) = sw.split(X3);
    let a = sw.word(w![s(w![x1, X2]), alpha, x2, X31]);
    let b = sw.word(w![s(w![X1]), alpha, x3, X32]);
    sw.finish(&[a, b])
}

/// `γ = S(X²x¹₂)αX³x² ⊗ S(X¹x¹₁)αx³`.
pub fn gamma_second<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let alpha = h.alpha();
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let (X1, X2, X3) = sw.put3(h.phi());
    let (x11, x12) = sw.split(x1);
    let a = sw.word(w![s(w![X2, x12]), alpha, X3, x2]);
    let b = sw.word(w![s(w![X1, x11]), alpha, x3]);
    sw.finish(&[a, b])
}

/// `δ = X¹₁x¹βS(X³) ⊗ X¹₂x²βS(X²x³)`.
pub fn delta_first<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let beta = h.beta();
    let mut sw = Sw::new(h);
    let (X1, X2, X3) = sw.put3(h.phi());
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let (X11, X12) = sw.split(X1);
    let a = sw.word(w![X11, x1, beta, s(w![X3])]);
    let b = sw.word(w![X12, x2, beta, s(w![X2, x3])]);
    sw.finish(&[a, b])
}

/// `δ = x¹βS(x³₂X³) ⊗ x²X¹βS(x³₁X²)`.
pub fn delta_second<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let beta = h.beta();
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let (X1, X2, X3) = sw.put3(h.phi());
    let (x31, x32) = sw.split(x3);
    let a = sw.word(w![x1, beta, s(w![x32, X3])]);
    let b = sw.word(w![x2, X1, beta, s(w![x31, X2])]);
    sw.finish(&[a, b])
}

/// `f = S(x¹₂)γ¹(x²βS(x³))₁ ⊗ S(x¹₁)γ²(x²βS(x³))₂`.
fn twist<F: Field>(h: &QhaPresentation<F>, gamma: &TensorElement<F>) -> TensorElement<F> {
    let beta = h.beta();
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let (x11, x12) = sw.split(x1);
    let m = sw.word(w![x2, beta, s(w![x3])]);
    let (m1, m2) = sw.split(m);
    let (c1, c2) = sw.put2(gamma);
    let a = sw.word(w![s(w![x12]), c1, m1]);
    let b = sw.word(w![s(w![x11]), c2, m2]);
    sw.finish(&[a, b])
}

/// `f⁻¹ = (S(x¹)αx²)₁δ¹S(x³₂) ⊗ (S(x¹)αx²)₂δ²S(x³₁)`.
fn twist_inverse<F: Field>(h: &QhaPresentation<F>, delta: &TensorElement<F>) -> TensorElement<F> {
    let alpha = h.alpha();
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let m = sw.word(w![s(w![x1]), alpha, x2]);
    let (m1, m2) = sw.split(m);
    let (x31, x32) = sw.split(x3);
    let (d1, d2) = sw.put2(delta);
    let a = sw.word(w![m1, d1, s(w![x32])]);
    let b = sw.word(w![m2, d2, s(w![x31])]);
    sw.finish(&[a, b])
}

fn p_right<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let b = sw.word(w![x2, h.beta(), s(w![x3])]);
    sw.finish(&[x1, b])
}

fn q_right<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (X1, X2, X3) = sw.put3(h.phi());
    let b = sw.word(w![si(w![h.alpha(), X3]), X2]);
    sw.finish(&[X1, b])
}

fn p_left<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (X1, X2, X3) = sw.put3(h.phi());
    let a = sw.word(w![X2, si(w![X1, h.beta()])]);
    sw.finish(&[a, X3])
}

fn q_left<F: Field>(h: &QhaPresentation<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    let a = sw.word(w![s(w![x1]), h.alpha(), x2]);
    sw.finish(&[a, x3])
}

/// `U = g¹S(q²) ⊗ g²S(q¹)` with `f⁻¹ = g¹⊗g²`.
fn u_element<F: Field>(h: &QhaPresentation<F>, f_inv: &TensorElement<F>, q_r: &TensorElement<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (g1, g2) = sw.put2(f_inv);
    let (q1, q2) = sw.put2(q_r);
    let a = sw.word(w![g1, s(w![q2])]);
    let b = sw.word(w![g2, s(w![q1])]);
    sw.finish(&[a, b])
}

/// `V = S⁻¹(f²p²) ⊗ S⁻¹(f¹p¹)`.
fn v_element<F: Field>(h: &QhaPresentation<F>, f: &TensorElement<F>, p_r: &TensorElement<F>) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (f1, f2) = sw.put2(f);
    let (p1, p2) = sw.put2(p_r);
    let a = sw.word(w![si(w![f2, p2])]);
    let b = sw.word(w![si(w![f1, p1])]);
    sw.finish(&[a, b])
}

impl<F: Field> CanonicalElements<F> {
    /// Computes every element, checking that the two displayed forms of
    /// `γ` and of `δ` agree and that the twist is invertible.
    pub fn compute(h: &QhaPresentation<F>) -> Result<CanonicalElements<F>, CanonicalError> {
        h.antipode_inverse()?;
        let gamma = gamma_first(h);
        if gamma != gamma_second(h) {
            return Err(CanonicalError::InternalIdentityFailure("the two forms of gamma differ".into()));
        }
        let delta = delta_first(h);
        if delta != delta_second(h) {
            return Err(CanonicalError::InternalIdentityFailure("the two forms of delta differ".into()));
        }
        let f = twist(h, &gamma);
        let f_inv = twist_inverse(h, &delta);
        let one = h.one(2);
        if h.mul(&f, &f_inv) != one || h.mul(&f_inv, &f) != one {
            return Err(CanonicalError::TwistNotInvertible);
        }
        let p_r = p_right(h);
        let q_r = q_right(h);
        let u = u_element(h, &f_inv, &q_r);
        let v = v_element(h, &f, &p_r);
        Ok(CanonicalElements { gamma, delta, f, f_inv, p_r, q_r, p_l: p_left(h), q_l: q_left(h), u, v })
    }
}

impl<F: Field> QhaPresentation<F> {
    /// Canonical elements, computed once per presentation.
    pub fn canonical(&self) -> Result<Arc<CanonicalElements<F>>, CanonicalError> {
        self.memo.canonical.get_or_init(|| CanonicalElements::compute(self).map(Arc::new)).clone()
    }
}
