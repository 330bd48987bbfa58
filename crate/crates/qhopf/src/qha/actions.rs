use crate::exactnum::Field;
use crate::multilinear::{Functional, TensorElement};

use super::{QhaError, QhaPresentation};

/// `(h⇀φ)(x) = φ(xh)`.
pub fn lhit<F: Field>(h: &QhaPresentation<F>, a: &TensorElement<F>, phi: &Functional<F>) -> Functional<F> {
    two_sided_hit(h, a, phi, h.unit())
}

/// `(φ↼h)(x) = φ(hx)`.
pub fn rhit<F: Field>(h: &QhaPresentation<F>, phi: &Functional<F>, b: &TensorElement<F>) -> Functional<F> {
    two_sided_hit(h, h.unit(), phi, b)
}

/// `(a⇀φ↼b)(x) = φ(bxa)`.
pub fn two_sided_hit<F: Field>(
    h: &QhaPresentation<F>,
    a: &TensorElement<F>,
    phi: &Functional<F>,
    b: &TensorElement<F>,
) -> Functional<F> {
    Functional::new((0..h.dim()).map(|i| phi.eval(&h.mul(&h.mul(b, &h.basis(i)), a))).collect())
}

/// `φ⇀h = φ(h₂)h₁`.
pub fn lhit_elem<F: Field>(h: &QhaPresentation<F>, phi: &Functional<F>, a: &TensorElement<F>) -> TensorElement<F> {
    h.delta(a).contract(phi, 1).expect("rank 2")
}

/// `h↼φ = φ(h₁)h₂`.
pub fn rhit_elem<F: Field>(h: &QhaPresentation<F>, a: &TensorElement<F>, phi: &Functional<F>) -> TensorElement<F> {
    h.delta(a).contract(phi, 0).expect("rank 2")
}

/// Product in `H*`: `(φψ)(x) = φ(x₁)ψ(x₂)`.
pub fn convolve<F: Field>(h: &QhaPresentation<F>, phi: &Functional<F>, psi: &Functional<F>) -> Functional<F> {
    Functional::new(
        (0..h.dim())
            .map(|i| {
                let d = h.delta(&h.basis(i));
                d.iter().fold(F::zero(), |acc, (ix, c)| acc + &c.times(&phi.at(ix[0]).times(&psi.at(ix[1]))))
            })
            .collect(),
    )
}

/// A binary bracketing describing an iterated coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Leaf,
    Node(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn node(l: Bracket, r: Bracket) -> Bracket {
        Bracket::Node(Box::new(l), Box::new(r))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Bracket::Leaf => 1,
            Bracket::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Parses strings like `((.,.),.)`.
    pub fn parse(text: &str) -> Result<Bracket, QhaError> {
        fn go(b: &[u8], pos: &mut usize) -> Result<Bracket, QhaError> {
            match b.get(*pos) {
                Some(b'.') => {
                    *pos += 1;
                    Ok(Bracket::Leaf)
                }
                Some(b'(') => {
                    *pos += 1;
                    let l = go(b, pos)?;
                    if b.get(*pos) != Some(&b',') {
                        return Err(QhaError::BadPlan(format!("expected ',' at {pos}")));
                    }
                    *pos += 1;
                    let r = go(b, pos)?;
                    if b.get(*pos) != Some(&b')') {
                        return Err(QhaError::BadPlan(format!("expected ')' at {pos}")));
                    }
                    *pos += 1;
                    Ok(Bracket::node(l, r))
                }
                _ => Err(QhaError::BadPlan(format!("unexpected input at {pos}"))),
            }
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let plan = go(compact.as_bytes(), &mut pos)?;
        if pos != compact.len() {
            return Err(QhaError::BadPlan("trailing input".into()));
        }
        Ok(plan)
    }
}

/// Expands leg `leg` of `t` by the iterated coproduct described by `plan`.
pub fn iterated_coproduct<F: Field>(
    h: &QhaPresentation<F>,
    t: &TensorElement<F>,
    leg: usize,
    plan: &Bracket,
) -> Result<TensorElement<F>, QhaError> {
    if leg >= t.rank() {
        return Err(QhaError::BadPlan(format!("leg {leg} out of range")));
    }
    match plan {
        Bracket::Leaf => Ok(t.clone()),
        Bracket::Node(l, r) => {
            let split = t.apply_on_leg(h.coproduct(), leg)?;
            let left = iterated_coproduct(h, &split, leg, l)?;
            iterated_coproduct(h, &left, leg + l.leaves(), r)
        }
    }
}
