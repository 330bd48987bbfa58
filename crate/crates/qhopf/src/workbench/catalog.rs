//! Built-in example algebras.

use num_traits::One;
use thiserror::Error;

use crate::exactnum::{Field, Gaussian, Rational};
use crate::multilinear::{Functional, LinearOperator, StructureConstants, TensorElement};
use crate::qha::{QhaError, QhaPresentation, RawPresentation};

pub const NAMES: [&str; 4] = ["H2", "H8+", "H8-", "kZ2-hopf"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}; known: H2, H8+, H8-, kZ2-hopf")]
    UnknownCatalogName(String),
    #[error(transparent)]
    Invalid(#[from] QhaError),
}

/// Builds and validates a catalog entry.
pub fn build(name: &str) -> Result<QhaPresentation<Gaussian>, CatalogError> {
    let raw = match name {
        "H2" => h2_raw(),
        "H8+" => h8_raw(Sign::Plus),
        "H8-" => h8_raw(Sign::Minus),
        "kZ2-hopf" => kz2_raw(),
        other => return Err(CatalogError::UnknownCatalogName(other.to_string())),
    };
    Ok(QhaPresentation::load(raw)?)
}

/// Which of the two eight-dimensional algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `±i`.
    pub fn i(self) -> Gaussian {
        match self {
            Sign::Plus => Gaussian::i(),
            Sign::Minus => -Gaussian::i(),
        }
    }

    /// `ω = ½(1 ± i)`.
    pub fn omega(self) -> Gaussian {
        half::<Gaussian>() * &(Gaussian::one() + &self.i())
    }

    /// `ω̄ = ½(1 ∓ i)`.
    pub fn omega_bar(self) -> Gaussian {
        self.omega().conj()
    }
}

fn half<F: Field>() -> F {
    F::from(2).inv().expect("char 0")
}

fn vector<F: Field>(coords: &[(usize, F)], n: usize) -> TensorElement<F> {
    TensorElement::from_entries(1, n, coords.iter().map(|(i, c)| (vec![*i], c.clone())))
}

/// `1 − 2 p₋⊗p₋⊗p₋` in the span of `1` and the grouplike at index `g`.
fn sign_reassociator<F: Field>(n: usize, g: usize) -> TensorElement<F> {
    let p_minus = vector(&[(0, half::<F>()), (g, -half::<F>())], n);
    let ppp = p_minus.tensor_product(&p_minus).and_then(|t| t.tensor_product(&p_minus)).expect("same dim");
    TensorElement::basis(n, &[0, 0, 0]).sub(&ppp.scale(&F::from(2))).expect("same shape")
}

fn group_z2<F: Field>(name: &str, phi: TensorElement<F>, alpha: usize) -> RawPresentation<F> {
    let n = 2;
    let mult = StructureConstants::from_entries(n, (0..2).flat_map(|i| (0..2).map(move |j| (i, j, (i + j) % 2, F::one()))));
    let coproduct = LinearOperator::new(1, 2, n, (0..2).map(|i| TensorElement::basis(n, &[i, i])).collect())
        .expect("two columns");
    RawPresentation {
        name: name.to_string(),
        labels: vec!["1".into(), "g".into()],
        mult,
        unit: TensorElement::basis(n, &[0]),
        coproduct,
        counit: Functional::new(vec![F::one(), F::one()]),
        phi_inv: phi.clone(),
        phi,
        antipode: LinearOperator::identity(n),
        alpha: TensorElement::basis(n, &[alpha]),
        beta: TensorElement::basis(n, &[0]),
    }
}

/// `k[ℤ/2]` with `Φ = 1 − 2p₋⊗p₋⊗p₋`, `S = id`, `α = g`, `β = 1`.
pub fn h2_raw<F: Field>() -> RawPresentation<F> {
    group_z2("H2", sign_reassociator(2, 1), 1)
}

/// The group algebra `k[ℤ/2]` as an ordinary Hopf algebra.
pub fn kz2_raw<F: Field>() -> RawPresentation<F> {
    group_z2("kZ2-hopf", TensorElement::basis(2, &[0, 0, 0]), 0)
}

pub fn h2<F: Field>() -> QhaPresentation<F> {
    QhaPresentation::load(h2_raw()).expect("catalog entry is valid")
}

pub fn kz2<F: Field>() -> QhaPresentation<F> {
    QhaPresentation::load(kz2_raw()).expect("catalog entry is valid")
}

/// Index of `g^a x^b` in the basis `1, x, x², x³, g, gx, gx², gx³`.
fn gx(a: usize, b: usize) -> usize {
    4 * a + b
}

/// `⟨g, x | g² = 1, x⁴ = 0, gx = −xg⟩` with `Δ(x) = x⊗(p₊±ip₋) + 1⊗p₊x + g⊗p₋x`,
/// `S(x) = −x(p₊±ip₋)`, `Φ = 1 − 2p₋⊗p₋⊗p₋`, `α = g`, `β = 1`.
pub fn h8_raw(sign: Sign) -> RawPresentation<Gaussian> {
    type G = Gaussian;
    let n = 8;
    let mut entries = Vec::new();
    for (a, b, c, d) in exponent_pairs() {
        if b + d < 4 {
            let s = if (b * c) % 2 == 1 { -G::one() } else { G::one() };
            entries.push((gx(a, b), gx(c, d), gx((a + c) % 2, b + d), s));
        }
    }
    let mult = StructureConstants::from_entries(n, entries);
    let e = |i: usize| TensorElement::<G>::basis(n, &[i]);
    let h = half::<G>();
    let p_plus = vector(&[(0, h.clone()), (gx(1, 0), h.clone())], n);
    let p_minus = vector(&[(0, h.clone()), (gx(1, 0), -h.clone())], n);
    let twist = p_plus.add(&p_minus.scale(&sign.i())).expect("same shape");
    let x = e(gx(0, 1));
    let g = e(gx(1, 0));
    let mul = |a: &TensorElement<G>, b: &TensorElement<G>| a.mult_pointwise(&mult, b).expect("same shape");
    let tp = |a: &TensorElement<G>, b: &TensorElement<G>| a.tensor_product(b).expect("same dim");

    let delta_g = tp(&g, &g);
    let delta_x = tp(&x, &twist)
        .add(&tp(&e(0), &mul(&p_plus, &x)))
        .and_then(|t| t.add(&tp(&g, &mul(&p_minus, &x))))
        .expect("same shape");
    let s_x = mul(&x, &twist).scale(&-G::one());

    let mut coproduct_cols = Vec::new();
    let mut antipode_cols = Vec::new();
    for a in 0..2 {
        for b in 0..4 {
            let mut d = tp(&e(0), &e(0));
            let mut s = e(0);
            for _ in 0..a {
                d = mul(&d, &delta_g);
            }
            for _ in 0..b {
                d = mul(&d, &delta_x);
                s = mul(&s_x, &s);
            }
            if a == 1 {
                s = mul(&s, &g);
            }
            coproduct_cols.push(d);
            antipode_cols.push(s);
        }
    }
    let name = match sign {
        Sign::Plus => "H8+",
        Sign::Minus => "H8-",
    };
    let labels = ["1", "x", "x^2", "x^3", "g", "gx", "gx^2", "gx^3"].map(String::from).to_vec();
    let phi = sign_reassociator(n, gx(1, 0));
    RawPresentation {
        name: name.to_string(),
        labels,
        mult,
        unit: e(0),
        coproduct: LinearOperator::new(1, 2, n, coproduct_cols).expect("eight columns"),
        counit: Functional::new((0..n).map(|i| if i % 4 == 0 { G::one() } else { G::from(0) }).collect()),
        phi_inv: phi.clone(),
        phi,
        antipode: LinearOperator::new(1, 1, n, antipode_cols).expect("eight columns"),
        alpha: g,
        beta: e(0),
    }
}

fn exponent_pairs() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..2).flat_map(|a| (0..4).flat_map(move |b| (0..2).flat_map(move |c| (0..4).map(move |d| (a, b, c, d)))))
}

pub fn h8(sign: Sign) -> QhaPresentation<Gaussian> {
    QhaPresentation::load(h8_raw(sign)).expect("catalog entry is valid")
}

/// `H2` over the rationals, for checks that the core is field-generic.
pub fn h2_rational() -> QhaPresentation<Rational> {
    h2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qha::{verify_axioms, AxiomScope, Variant};

    fn q(n: i64, d: i64) -> Gaussian {
        Gaussian::real(Rational::new(n, d))
    }

    #[test]
    fn every_entry_loads() {
        for name in NAMES {
            let h = build(name).unwrap();
            assert!(verify_axioms(&h, AxiomScope::Basis).all_passed(), "{name}");
        }
        assert_eq!(build("H8+").unwrap().field_tag(), crate::FieldTag::QI);
        assert!(matches!(build("H4"), Err(CatalogError::UnknownCatalogName(_))));
    }

    #[test]
    fn inverse_antipode_on_x() {
        for sign in [Sign::Plus, Sign::Minus] {
            let h = h8(sign);
            let x = h.basis(1);
            let x2 = h.basis(2);
            let p_plus = h.unit().add(&h.basis(4)).unwrap().scale(&q(1, 2));
            let p_minus = h.unit().sub(&h.basis(4)).unwrap().scale(&q(1, 2));
            let expected = h.mul(&p_plus.sub(&p_minus.scale(&sign.i())).unwrap(), &x).scale(&-Gaussian::one());
            assert_eq!(h.s_inv(&x).unwrap(), expected);
            assert_eq!(h.s_inv(&x2).unwrap(), x2.scale(&-sign.i()));
        }
    }

    #[test]
    fn q6_fails_without_reassociator() {
        let mut raw = h2_raw::<Rational>();
        raw.phi = TensorElement::basis(2, &[0, 0, 0]);
        raw.phi_inv = raw.phi.clone();
        match QhaPresentation::load(raw) {
            Err(QhaError::AxiomViolation { check, .. }) => assert_eq!(check, "phi_antipode"),
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn variants_round_trip() {
        let h = h8(Sign::Plus);
        for v in [Variant::Op, Variant::Cop, Variant::OpCop] {
            let once = h.variant(v).unwrap();
            assert!(verify_axioms(&once, AxiomScope::Basis).all_passed(), "{v:?}");
            let twice = once.variant(v).unwrap();
            assert_eq!(twice, h, "{v:?}");
        }
        let h = h2::<Rational>();
        let cop = h.variant(Variant::Cop).unwrap();
        assert_eq!(cop.alpha(), &h.basis(1));
        let flipped = h.phi_inv().permute_legs(&[2, 1, 0]);
        assert_eq!(cop.phi(), &flipped);
        let k = kz2::<Rational>();
        assert_eq!(k.variant(Variant::Op).unwrap(), k);
    }

    #[test]
    fn omega_products() {
        let s = Sign::Plus;
        assert_eq!(s.omega() * &s.omega_bar(), q(1, 2));
        assert_eq!(s.omega().inv().unwrap(), Gaussian::one() - &Gaussian::i());
    }
}
