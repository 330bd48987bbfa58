use crate::exactnum::Field;
use crate::multilinear::{Functional, LinearOperator, TensorElement};
use crate::qha::sweedler::Sw;
use crate::qha::{lhit, QhaPresentation};
use crate::w;

use super::IntegralError;

/// Which Frobenius system of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrobeniusKind {
    /// `(λ∘S⁻¹, q¹t₁p¹ ⊗ S(q²t₂p²))`.
    Left,
    /// `(Λ∘S, q̃²t₂p̃² ⊗ S⁻¹(q̃¹t₁p̃¹))`.
    Cop,
    /// `(d⇀λ∘S, S⁻¹(q²r₂p²) ⊗ q¹r₁p¹)` with `r = S⁻¹(t)`, coming from `H^op`.
    Op,
    /// `(Λ, q̃¹t₁p̃¹ ⊗ S(q̃²t₂p̃²))`.
    RightCointegral,
}

impl FrobeniusKind {
    pub const ALL: [FrobeniusKind; 4] =
        [FrobeniusKind::Left, FrobeniusKind::Cop, FrobeniusKind::Op, FrobeniusKind::RightCointegral];

    pub fn name(self) -> &'static str {
        match self {
            FrobeniusKind::Left => "left",
            FrobeniusKind::Cop => "cop",
            FrobeniusKind::Op => "op",
            FrobeniusKind::RightCointegral => "right_cointegral",
        }
    }
}

/// A Frobenius morphism, its dual element and the Nakayama automorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusSystem<F> {
    pub phi: Functional<F>,
    pub e: TensorElement<F>,
    /// `χ(a) = φ(e¹a)e²`.
    pub nakayama: LinearOperator<F>,
    /// `χ⁻¹(a) = φ(ae²)e¹`.
    pub nakayama_inv: LinearOperator<F>,
}

/// `a¹x₁b¹ ⊗ a²x₂b²`.
pub(crate) fn sandwich<F: Field>(
    h: &QhaPresentation<F>,
    a: &TensorElement<F>,
    x: &TensorElement<F>,
    b: &TensorElement<F>,
) -> TensorElement<F> {
    let mut sw = Sw::new(h);
    let (a1, a2) = sw.put2(a);
    let (b1, b2) = sw.put2(b);
    let x = sw.put1(x);
    let (x1, x2) = sw.split(x);
    let l = sw.word(w![a1, x1, b1]);
    let r = sw.word(w![a2, x2, b2]);
    sw.finish(&[l, r])
}

impl<F: Field> FrobeniusSystem<F> {
    pub fn new(h: &QhaPresentation<F>, phi: Functional<F>, e: TensorElement<F>) -> FrobeniusSystem<F> {
        let n = h.dim();
        let mut chi = Vec::with_capacity(n);
        let mut chi_inv = Vec::with_capacity(n);
        for i in 0..n {
            let a = h.basis(i);
            let right = h.mul(&h.unit().tensor_product(&a).expect("dim"), &e);
            chi_inv.push(right.contract(&phi, 1).expect("rank 2"));
            let left = h.mul(&e, &a.tensor_product(h.unit()).expect("dim"));
            chi.push(left.contract(&phi, 0).expect("rank 2"));
        }
        FrobeniusSystem {
            phi,
            e,
            nakayama: LinearOperator::new(1, 1, n, chi).expect("shape"),
            nakayama_inv: LinearOperator::new(1, 1, n, chi_inv).expect("shape"),
        }
    }

    /// First failing Frobenius condition, if any.
    pub fn violation(&self, h: &QhaPresentation<F>) -> Option<String> {
        let one = h.unit();
        for i in 0..h.dim() {
            let a = h.basis(i);
            let left = h.mul(&a.tensor_product(one).unwrap(), &self.e);
            let right = h.mul(&self.e, &one.tensor_product(&a).unwrap());
            if left != right {
                return Some(format!("a·e ≠ e·a at {}", h.labels()[i]));
            }
        }
        if &self.e.contract(&self.phi, 0).unwrap() != one {
            return Some("φ(e¹)e² ≠ 1".into());
        }
        if &self.e.contract(&self.phi, 1).unwrap() != one {
            return Some("φ(e²)e¹ ≠ 1".into());
        }
        None
    }
}

/// Builds the requested system from normalized integral data and checks
/// both Frobenius conditions.
pub fn frobenius_system<F: Field>(h: &QhaPresentation<F>, kind: FrobeniusKind) -> Result<FrobeniusSystem<F>, IntegralError> {
    let c = h.canonical()?;
    let ints = h.integrals()?;
    let co = h.cointegrals()?;
    let t = &ints.left;
    let sinv = h.antipode_inverse()?;
    let s = h.antipode();
    let (phi, e) = match kind {
        FrobeniusKind::Left => {
            let e = sandwich(h, &c.q_r, t, &c.p_r).apply_on_leg(s, 1)?;
            (co.left.compose(&sinv), e)
        }
        FrobeniusKind::Cop => {
            let e = sandwich(h, &c.q_l, t, &c.p_l).permute_legs(&[1, 0]).apply_on_leg(&sinv, 1)?;
            (co.right.compose(s), e)
        }
        FrobeniusKind::Op => {
            let r = h.s_inv(t)?;
            let e = sandwich(h, &c.q_r, &r, &c.p_r).apply_on_leg(&sinv, 1)?.permute_legs(&[1, 0]);
            (lhit(h, &co.d, &co.left.compose(s)), e)
        }
        FrobeniusKind::RightCointegral => {
            let e = sandwich(h, &c.q_l, t, &c.p_l).apply_on_leg(s, 1)?;
            (co.right.clone(), e)
        }
    };
    let sys = FrobeniusSystem::new(h, phi, e);
    match sys.violation(h) {
        Some(why) => Err(IntegralError::FrobeniusCheckFailed(format!("{} system: {why}", kind.name()))),
        None => Ok(sys),
    }
}

/// `ξ(h*) = h*(S(q²t₂p²))q¹t₁p¹` as an operator on coordinates.
pub fn xi_operator<F: Field>(h: &QhaPresentation<F>) -> Result<LinearOperator<F>, IntegralError> {
    let c = h.canonical()?;
    let ints = h.integrals()?;
    let e = sandwich(h, &c.q_r, &ints.left, &c.p_r).apply_on_leg(h.antipode(), 1)?;
    let cols = (0..h.dim()).map(|i| e.contract(&Functional::dual_basis(h.dim(), i), 1).unwrap()).collect();
    Ok(LinearOperator::new(1, 1, h.dim(), cols)?)
}
