use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::exactnum::Field;
use crate::multilinear::{kernel, Functional, TensorElement};
use crate::qha::sweedler::{s, si, Sw};
use crate::qha::{QhaPresentation, Variant};
use crate::w;

use super::modular;
use super::{IntegralError, Side};

/// Normalized cointegrals together with the modular element `g` of `H`
/// and the comparison elements `u`, `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct CointegralData<F> {
    /// `λ` with `λ(S⁻¹(t)) = 1`.
    pub left: Functional<F>,
    /// `Λ` with `Λ(S(t)) = 1`.
    pub right: Functional<F>,
    pub g: TensorElement<F>,
    pub g_inv: TensorElement<F>,
    pub u: TensorElement<F>,
    pub u_inv: TensorElement<F>,
    pub v: TensorElement<F>,
    pub v_inv: TensorElement<F>,
    /// `μ⁻¹(p̃¹)S⁻²(p̃²)`, relating the op Frobenius morphism to `λ∘S`.
    pub d: TensorElement<F>,
}

/// Solutions `φ` of `Σ_k φ_k (lhs − rhs)[i, k, j] = 0` for all `i, j`.
fn solve<F: Field>(n: usize, lhs: &TensorElement<F>, rhs: &TensorElement<F>) -> Vec<Functional<F>> {
    let diff = lhs.sub(rhs).expect("same shape");
    let mut rows: FxHashMap<(usize, usize), Vec<F>> = FxHashMap::default();
    for (ix, c) in diff.iter() {
        rows.entry((ix[0], ix[2])).or_insert_with(|| vec![F::zero(); n])[ix[1]] = c.clone();
    }
    let mut keys: Vec<_> = rows.keys().copied().collect();
    keys.sort_unstable();
    let rows: Vec<Vec<F>> = keys.into_iter().map(|k| rows.remove(&k).unwrap()).collect();
    kernel::kernel_basis(&rows, n).into_iter().map(|v| Functional::new(kernel::normalize_leading(&v))).collect()
}

/// Both sides of `λ(V²h₂U²)V¹h₁U¹ = μ(x¹)λ(hS(x²))x³`, with `h` and the
/// coordinate of `λ` kept as open legs.
pub(crate) fn left_cointegral_system<F: Field>(
    h: &QhaPresentation<F>,
    mu: &Functional<F>,
) -> Result<(TensorElement<F>, TensorElement<F>), IntegralError> {
    let c = h.canonical()?;
    let mut sw = Sw::new(h);
    let (l, e) = sw.label();
    let (V1, V2) = sw.put2(&c.v);
    let (U1, U2) = sw.put2(&c.u);
    let (e1, e2) = sw.split(e);
    let k = sw.word(w![V2, e2, U2]);
    let j = sw.word(w![V1, e1, U1]);
    let lhs = sw.finish(&[l, k, j]);
    let mut sw = Sw::new(h);
    let (l, e) = sw.label();
    let (x1, x2, x3) = sw.put3(h.phi_inv());
    sw.scalar(mu, w![x1]);
    let k = sw.word(w![e, s(w![x2])]);
    let rhs = sw.finish(&[l, k, x3]);
    Ok((lhs, rhs))
}

/// Both sides of
/// `Λ(S(p̃²)f¹h₁S⁻¹(q̃²g²))S(p̃¹)f²h₂S⁻¹(q̃¹g¹) = μ(X³)Λ(hS⁻¹(X²))X¹`.
pub(crate) fn right_cointegral_system<F: Field>(
    h: &QhaPresentation<F>,
    mu: &Functional<F>,
) -> Result<(TensorElement<F>, TensorElement<F>), IntegralError> {
    let c = h.canonical()?;
    let mut sw = Sw::new(h);
    let (pl1, pl2) = sw.put2(&c.p_l);
    let (f1, f2) = sw.put2(&c.f);
    let a1 = sw.word(w![s(w![pl2]), f1]);
    let a2 = sw.word(w![s(w![pl1]), f2]);
    let left = sw.finish(&[a1, a2]);
    let mut sw = Sw::new(h);
    let (ql1, ql2) = sw.put2(&c.q_l);
    let (g1, g2) = sw.put2(&c.f_inv);
    let b1 = sw.word(w![si(w![ql2, g2])]);
    let b2 = sw.word(w![si(w![ql1, g1])]);
    let right = sw.finish(&[b1, b2]);
    let mut sw = Sw::new(h);
    let (l, e) = sw.label();
    let (e1, e2) = sw.split(e);
    let (a1, a2) = sw.put2(&left);
    let k = sw.word(w![a1, e1]);
    let j = sw.word(w![a2, e2]);
    let (b1, b2) = sw.put2(&right);
    let k = sw.word(w![k, b1]);
    let j = sw.word(w![j, b2]);
    let lhs = sw.finish(&[l, k, j]);
    let mut sw = Sw::new(h);
    let (l, e) = sw.label();
    let (X1, X2, X3) = sw.put3(h.phi());
    sw.scalar(mu, w![X3]);
    let k = sw.word(w![e, si(w![X2])]);
    let rhs = sw.finish(&[l, k, X1]);
    Ok((lhs, rhs))
}

fn same_span<F: Field>(a: &[Functional<F>], b: &[Functional<F>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

/// Basis of left or right cointegrals, leading coordinate one.
///
/// Left cointegrals solve the full coinvariance system. Right cointegrals
/// are the left cointegrals of `H^cop`; the direct right-hand system is
/// solved too and must give the same space.
pub fn cointegral_space<F: Field>(h: &QhaPresentation<F>, side: Side) -> Result<Vec<Functional<F>>, IntegralError> {
    let mu = h.integrals()?.mu.clone();
    match side {
        Side::Left => {
            let (lhs, rhs) = left_cointegral_system(h, &mu)?;
            Ok(solve(h.dim(), &lhs, &rhs))
        }
        Side::Right => {
            let cop = h.variant(Variant::Cop)?;
            let cop_mu = cop.integrals()?.mu.clone();
            let (lhs, rhs) = left_cointegral_system(&cop, &cop_mu)?;
            let via_cop = solve(h.dim(), &lhs, &rhs);
            let (lhs, rhs) = right_cointegral_system(h, &mu)?;
            let direct = solve(h.dim(), &lhs, &rhs);
            if !same_span(&via_cop, &direct) {
                return Err(IntegralError::CrossCheckMismatch(
                    "right cointegrals of H and left cointegrals of H^cop differ".into(),
                ));
            }
            Ok(direct)
        }
    }
}

fn one_line<F: Field>(h: &QhaPresentation<F>, side: Side) -> Result<Functional<F>, IntegralError> {
    let mut space = cointegral_space(h, side)?;
    if space.len() != 1 {
        return Err(IntegralError::DimensionNotOne { what: format!("{} cointegrals", side.name()), found: space.len() });
    }
    Ok(space.remove(0))
}

fn rescale<F: Field>(phi: Functional<F>, at: &TensorElement<F>, what: &str) -> Result<Functional<F>, IntegralError> {
    let v = phi.eval(at);
    let inv = v.inv().map_err(|_| IntegralError::DegeneratePairing(what.to_string()))?;
    Ok(phi.scale(&inv))
}

impl<F: Field> CointegralData<F> {
    pub fn compute(h: &QhaPresentation<F>) -> Result<CointegralData<F>, IntegralError> {
        let ints = h.integrals()?;
        let t = &ints.left;
        let left = rescale(one_line(h, Side::Left)?, &h.s_inv(t)?, "λ(S⁻¹(t)) = 0")?;
        let right = rescale(one_line(h, Side::Right)?, &h.s(t), "Λ(S(t)) = 0")?;
        let (g, g_inv) = modular::modular_element_g(h, &left, t)?;
        let (u, u_inv) = modular::u_elements(h, &ints)?;
        let (v, v_inv) = modular::v_elements(h, &ints, &g)?;
        let d = modular::d_element(h, &ints.mu_inv)?;
        Ok(CointegralData { left, right, g, g_inv, u, u_inv, v, v_inv, d })
    }
}

impl<F: Field> QhaPresentation<F> {
    /// Cointegral data, computed once per presentation.
    pub fn cointegrals(&self) -> Result<Arc<CointegralData<F>>, IntegralError> {
        self.memo.cointegrals.get_or_init(|| CointegralData::compute(self).map(Arc::new)).clone()
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::intcoint::Side;
    use crate::workbench::catalog::{self, Sign};
    use crate::Gaussian;

    fn dual(n: usize, entries: &[(usize, Gaussian)]) -> Functional<Gaussian> {
        let mut c = vec![Gaussian::zero(); n];
        for (i, v) in entries {
            c[*i] = v.clone();
        }
        Functional::new(c)
    }

    #[test]
    fn h2_cointegrals_are_p_g() {
        let h = catalog::build("H2").unwrap();
        let p_g = dual(2, &[(1, Gaussian::from(1))]);
        assert_eq!(cointegral_space(&h, Side::Left).unwrap(), vec![p_g.clone()]);
        assert_eq!(cointegral_space(&h, Side::Right).unwrap(), vec![p_g]);
        let co = h.cointegrals().unwrap();
        assert_eq!(&co.g, h.unit());
    }

    #[test]
    fn h8_cointegrals_and_modular_element() {
        for sign in [Sign::Plus, Sign::Minus] {
            let h = catalog::h8(sign);
            let (w, wb) = (sign.omega(), sign.omega_bar());
            let co = h.cointegrals().unwrap();
            assert_eq!(co.left, dual(8, &[(3, Gaussian::from(1))]));
            assert_eq!(co.right, dual(8, &[(3, w.clone()), (7, wb.clone())]));
            let g = TensorElement::from_entries(1, 8, [(vec![0], w.clone()), (vec![4], wb.clone())]);
            let g_inv = TensorElement::from_entries(1, 8, [(vec![0], wb), (vec![4], w)]);
            assert_eq!(co.g, g);
            assert_eq!(co.g_inv, g_inv);
            assert_eq!(&co.u, h.unit());
        }
    }
}
