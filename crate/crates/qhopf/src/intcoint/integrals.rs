use std::sync::Arc;

use crate::exactnum::Field;
use crate::multilinear::{kernel, Functional, TensorElement};
use crate::qha::QhaPresentation;

use super::{IntegralError, Side};

/// Normalized integrals and the modular element `μ` of `H*`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralData<F> {
    /// `t`, first nonzero coordinate one.
    pub left: TensorElement<F>,
    /// `r`, first nonzero coordinate one.
    pub right: TensorElement<F>,
    pub mu: Functional<F>,
    /// `μ⁻¹ = μ∘S`.
    pub mu_inv: Functional<F>,
}

/// Basis of `{t : ht = ε(h)t}` (left) or `{t : th = ε(h)t}` (right), each
/// vector scaled so its first nonzero coordinate is one.
pub fn integral_space<F: Field>(h: &QhaPresentation<F>, side: Side) -> Vec<TensorElement<F>> {
    let n = h.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let m = match side {
            Side::Left => h.mult().left_matrix(i),
            Side::Right => h.mult().right_matrix(i),
        };
        let e = h.eps(&h.basis(i));
        for (r, mut row) in m.into_iter().enumerate() {
            row[r] = row[r].clone() - &e;
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    kernel::kernel_basis(&rows, n)
        .into_iter()
        .map(|v| TensorElement::from_coords(&kernel::normalize_leading(&v)))
        .collect()
}

fn one_line<F: Field>(h: &QhaPresentation<F>, side: Side) -> Result<TensorElement<F>, IntegralError> {
    let mut space = integral_space(h, side);
    if space.len() != 1 {
        return Err(IntegralError::DimensionNotOne { what: format!("{} integrals", side.name()), found: space.len() });
    }
    Ok(space.remove(0))
}

/// `μ` from `t e_i = μ(e_i) t`, read off at the first nonzero coordinate of
/// `t` and checked on every basis element.
fn modular_functional<F: Field>(h: &QhaPresentation<F>, t: &TensorElement<F>) -> Result<Functional<F>, IntegralError> {
    let (lead, c) = t.iter().next().map(|(i, c)| (i[0], c.clone())).expect("nonzero integral");
    let c_inv = c.inv().expect("nonzero");
    let mut coords = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let ti = h.mul(t, &h.basis(i));
        let m = ti.coord(lead).times(&c_inv);
        if ti != t.scale(&m) {
            return Err(IntegralError::CrossCheckMismatch(format!(
                "t·{} is not a multiple of t",
                h.labels()[i]
            )));
        }
        coords.push(m);
    }
    Ok(Functional::new(coords))
}

impl<F: Field> IntegralData<F> {
    pub fn compute(h: &QhaPresentation<F>) -> Result<IntegralData<F>, IntegralError> {
        let left = one_line(h, Side::Left)?;
        let right = one_line(h, Side::Right)?;
        let mu = modular_functional(h, &left)?;
        let mu_inv = mu.compose(h.antipode());
        Ok(IntegralData { left, right, mu, mu_inv })
    }

    pub fn is_unimodular(&self, h: &QhaPresentation<F>) -> bool {
        &self.mu == h.counit()
    }
}

impl<F: Field> QhaPresentation<F> {
    /// Integral data, computed once per presentation.
    pub fn integrals(&self) -> Result<Arc<IntegralData<F>>, IntegralError> {
        self.memo.integrals.get_or_init(|| IntegralData::compute(self).map(Arc::new)).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::catalog::{self, Sign};
    use crate::Gaussian;

    fn coords(v: &[i64]) -> TensorElement<Gaussian> {
        TensorElement::from_coords(&v.iter().map(|&c| Gaussian::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn two_dimensional_integrals() {
        let h = catalog::build("H2").unwrap();
        let d = h.integrals().unwrap();
        assert_eq!(d.left, coords(&[1, 1]));
        assert_eq!(d.right, coords(&[1, 1]));
        assert_eq!(&d.mu, h.counit());
        assert!(d.is_unimodular(&h));
    }

    #[test]
    fn eight_dimensional_integrals() {
        for sign in [Sign::Plus, Sign::Minus] {
            let h = catalog::h8(sign);
            let d = h.integrals().unwrap();
            assert_eq!(d.left, coords(&[0, 0, 0, 1, 0, 0, 0, 1]));
            assert_eq!(d.right, coords(&[0, 0, 0, 1, 0, 0, 0, -1]));
            let mu: Vec<i64> = vec![1, 0, 0, 0, -1, 0, 0, 0];
            assert_eq!(d.mu, Functional::new(mu.iter().map(|&c| Gaussian::from(c)).collect()));
            assert!(!d.is_unimodular(&h));
        }
    }
}
