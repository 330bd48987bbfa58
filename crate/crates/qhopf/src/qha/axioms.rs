use rayon::prelude::*;

use crate::exactnum::Field;
use crate::multilinear::TensorElement;

use super::report::{ReportRow, VerificationReport};
use super::sweedler::{s, Sw};
use super::QhaPresentation;
use crate::w;

/// Which elements the "for all h" axioms are evaluated on.
///
/// Every such axiom is closed under products once multiplicativity of
/// `Δ`, `ε` and anti-multiplicativity of `S` hold, so a generating set
/// suffices. `Auto` enumerates the full basis up to dimension 16.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomScope {
    Auto,
    Basis,
    Generators,
}

impl AxiomScope {
    pub(crate) fn elements<F: Field>(self, h: &QhaPresentation<F>) -> Vec<usize> {
        let full = match self {
            AxiomScope::Basis => true,
            AxiomScope::Generators => false,
            AxiomScope::Auto => h.dim() <= 16,
        };
        if full {
            (0..h.dim()).collect()
        } else {
            h.generators().to_vec()
        }
    }
}

/// Evaluates `lhs − rhs` for each basis index and reports the first
/// nonzero residual.
pub(crate) fn per_element<F, G>(h: &QhaPresentation<F>, name: &str, elements: &[usize], f: G) -> ReportRow<F>
where
    F: Field,
    G: Fn(usize) -> (TensorElement<F>, TensorElement<F>) + Sync,
{
    let rows: Vec<(usize, ReportRow<F>)> =
        elements.par_iter().map(|&i| { let (l, r) = f(i); (i, ReportRow::compare(name, &l, &r)) }).collect();
    let label = |i: usize| h.labels().get(i).cloned().unwrap_or_else(|| i.to_string());
    match rows.into_iter().find(|(_, r)| !r.passed()) {
        Some((i, row)) => row.with_detail(format!("fails at {}", label(i))),
        None => ReportRow::compare(name, &h.zero(1), &h.zero(1)).with_detail(format!("{} elements", elements.len())),
    }
}

/// One report row per axiom.
pub fn verify_axioms<F: Field>(h: &QhaPresentation<F>, scope: AxiomScope) -> VerificationReport<F> {
    let mut rep = VerificationReport::new(format!("axioms of {}", h.name()));
    let n = h.dim();
    let all: Vec<usize> = (0..n).collect();
    let hs = scope.elements(h);
    let m = h.mult();
    let e = |i| h.basis(i);
    let one = h.unit();

    rep.push(per_element(h, "associativity", &all, |a| {
        let mut l = TensorElement::zero(3, n);
        let mut r = TensorElement::zero(3, n);
        for b in 0..n {
            let ab = m.mul(&e(a), &e(b));
            for &c in &hs {
                let lhs = m.mul(&ab, &e(c));
                let rhs = m.mul(&e(a), &m.mul(&e(b), &e(c)));
                for (k, v) in lhs.iter() {
                    l.add_at(&[b, c, k[0]], v.clone());
                }
                for (k, v) in rhs.iter() {
                    r.add_at(&[b, c, k[0]], v.clone());
                }
            }
        }
        (l, r)
    }));
    rep.push(per_element(h, "unit", &all, |a| {
        let left = m.mul(one, &e(a));
        let right = m.mul(&e(a), one);
        (left.tensor_product(&right).unwrap(), e(a).tensor_product(&e(a)).unwrap())
    }));
    rep.push(per_element(h, "counit_multiplicative", &all, |a| {
        let l: Vec<F> = hs.iter().map(|&b| h.eps(&m.mul(&e(a), &e(b)))).collect();
        let r: Vec<F> = hs.iter().map(|&b| h.eps(&e(a)).times(&h.eps(&e(b)))).collect();
        if l.is_empty() {
            return (h.zero(1), h.zero(1));
        }
        (TensorElement::from_coords(&l), TensorElement::from_coords(&r))
    }));
    rep.push(ReportRow::scalar("counit_unit", &h.eps(one), &F::one()));
    rep.push(per_element(h, "coproduct_multiplicative", &all, |a| {
        let da = h.delta(&e(a));
        let mut l = TensorElement::zero(3, n);
        let mut r = TensorElement::zero(3, n);
        for &b in &hs {
            let lhs = h.delta(&m.mul(&e(a), &e(b)));
            let rhs = da.mult_pointwise(m, &h.delta(&e(b))).unwrap();
            for (k, v) in lhs.iter() {
                l.add_at(&[b, k[0], k[1]], v.clone());
            }
            for (k, v) in rhs.iter() {
                r.add_at(&[b, k[0], k[1]], v.clone());
            }
        }
        (l, r)
    }));
    rep.push(ReportRow::compare("coproduct_unit", &h.delta(one), &h.one(2)));
    rep.push(per_element(h, "counit_laws", &all, |a| {
        let d = h.delta(&e(a));
        let l = d.contract(h.counit(), 1).unwrap();
        let r = d.contract(h.counit(), 0).unwrap();
        (l.tensor_product(&r).unwrap(), e(a).tensor_product(&e(a)).unwrap())
    }));
    let phi = h.phi();
    let phi_inv = h.phi_inv();
    let one3 = h.one(3);
    let left_inv = phi.mult_pointwise(m, phi_inv).unwrap();
    let right_inv = phi_inv.mult_pointwise(m, phi).unwrap();
    rep.push(ReportRow::compare(
        "phi_inverse",
        &left_inv.tensor_product(&right_inv).unwrap(),
        &one3.tensor_product(&one3).unwrap(),
    ));
    let delta = h.coproduct();
    rep.push(per_element(h, "quasi_coassociativity", &hs, |a| {
        let d = h.delta(&e(a));
        let lhs = d.apply_on_leg(delta, 1).unwrap();
        let mid = d.apply_on_leg(delta, 0).unwrap();
        let rhs = phi.mult_pointwise(m, &mid).unwrap().mult_pointwise(m, phi_inv).unwrap();
        (lhs, rhs)
    }));
    {
        let one1 = h.one(1);
        let lhs = one1
            .tensor_product(phi)
            .unwrap()
            .mult_pointwise(m, &phi.apply_on_leg(delta, 1).unwrap())
            .unwrap()
            .mult_pointwise(m, &phi.tensor_product(&one1).unwrap())
            .unwrap();
        let rhs = phi
            .apply_on_leg(delta, 2)
            .unwrap()
            .mult_pointwise(m, &phi.apply_on_leg(delta, 0).unwrap())
            .unwrap();
        rep.push(ReportRow::compare("pentagon", &lhs, &rhs));
    }
    let eps = h.counit();
    rep.push(ReportRow::compare("phi_counit_middle", &phi.contract(eps, 1).unwrap(), &h.one(2)));
    let outer = phi
        .contract(eps, 0)
        .unwrap()
        .tensor_product(&phi.contract(eps, 2).unwrap())
        .unwrap();
    rep.push(ReportRow::compare("phi_counit_outer", &outer, &h.one(4)));
    let alpha = h.alpha();
    let beta = h.beta();
    rep.push(per_element(h, "antipode_alpha", &hs, |a| {
        let mut sw = Sw::new(h);
        let x = sw.put1(&e(a));
        let (x1, x2) = sw.split(x);
        let out = sw.word(w![s(w![x1]), alpha, x2]);
        (sw.finish(&[out]), alpha.scale(&h.eps(&e(a))))
    }));
    rep.push(per_element(h, "antipode_beta", &hs, |a| {
        let mut sw = Sw::new(h);
        let x = sw.put1(&e(a));
        let (x1, x2) = sw.split(x);
        let out = sw.word(w![x1, beta, s(w![x2])]);
        (sw.finish(&[out]), beta.scale(&h.eps(&e(a))))
    }));
    {
        let mut sw = Sw::new(h);
        let (x1, x2, x3) = sw.put3(phi);
        let out = sw.word(w![x1, beta, s(w![x2]), alpha, x3]);
        rep.push(ReportRow::compare("phi_antipode", &sw.finish(&[out]), one));
        let mut sw = Sw::new(h);
        let (y1, y2, y3) = sw.put3(phi_inv);
        let out = sw.word(w![s(w![y1]), alpha, y2, beta, s(w![y3])]);
        rep.push(ReportRow::compare("phi_inv_antipode", &sw.finish(&[out]), one));
    }
    rep.push(per_element(h, "antipode_antimultiplicative", &all, |a| {
        let mut l = TensorElement::zero(2, n);
        let mut r = TensorElement::zero(2, n);
        for &b in &hs {
            for (k, v) in h.s(&m.mul(&e(a), &e(b))).iter() {
                l.add_at(&[b, k[0]], v.clone());
            }
            for (k, v) in m.mul(&h.s(&e(b)), &h.s(&e(a))).iter() {
                r.add_at(&[b, k[0]], v.clone());
            }
        }
        (l, r)
    }));
    rep.push(ReportRow::compare("antipode_unit", &h.s(one), one));
    let ea = h.eps(alpha);
    let eb = h.eps(beta);
    rep.push(ReportRow::scalar("counit_alpha_beta", &ea.times(&eb), &F::one()));
    rep.push(ReportRow::compare(
        "counit_antipode",
        &h.counit().compose(h.antipode()).as_tensor(),
        &h.counit().as_tensor(),
    ));
    rep
}
