//! Exact scalars: rationals and Gaussian rationals.
//!
//! Everything above this module is generic over [`Field`], which both
//! [`Rational`] and [`Gaussian`] implement.

mod gaussian;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

pub use gaussian::Gaussian;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: &str) -> ParseError {
        ParseError { offset, message: message.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("division by zero")]
pub struct DivisionByZero;

/// Coefficient fields the engine knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldTag {
    Q,
    QI,
}

impl FieldTag {
    pub fn join(self, other: FieldTag) -> FieldTag {
        self.max(other)
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::QI => "Q(i)",
        }
    }

    pub fn from_name(name: &str) -> Option<FieldTag> {
        match name {
            "Q" => Some(FieldTag::Q),
            "Q(i)" => Some(FieldTag::QI),
            _ => None,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact field of characteristic zero with a canonical text form.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + FromStr<Err = ParseError>
    + Zero
    + One
    + From<i64>
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn inv(&self) -> Result<Self, DivisionByZero>;

    fn tag(&self) -> FieldTag;

    /// Product without consuming either side.
    fn times(&self, rhs: &Self) -> Self;

    fn div(&self, rhs: &Self) -> Result<Self, DivisionByZero> {
        Ok(self.times(&rhs.inv()?))
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Rational, DivisionByZero> {
        self.recip().ok_or(DivisionByZero)
    }
    fn tag(&self) -> FieldTag {
        FieldTag::Q
    }
    fn times(&self, rhs: &Rational) -> Rational {
        self * rhs
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Rational, ParseError> {
        let (value, end) = Rational::parse_prefix(text, 0)?;
        if end != text.len() {
            return Err(ParseError::new(end, "trailing input"));
        }
        Ok(value)
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Result<Gaussian, DivisionByZero> {
        self.inverse()
    }
    fn tag(&self) -> FieldTag {
        self.field_tag()
    }
    fn times(&self, rhs: &Gaussian) -> Gaussian {
        self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn gaussian() -> impl Strategy<Value = Gaussian> {
        (small_rational(), small_rational(), any::<bool>())
            .prop_map(|(re, im, real)| if real { Gaussian::real(re) } else { Gaussian::new(re, im) })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
            prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
            prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            prop_assert_eq!(a.clone() - &a, Gaussian::zero());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * &a.inv().unwrap(), Gaussian::one());
            }
        }

        #[test]
        fn render_is_canonical(a in gaussian(), b in gaussian()) {
            let same_text = a.to_string() == b.to_string();
            prop_assert_eq!(same_text, a == b);
            prop_assert_eq!(a.to_string().parse::<Gaussian>().unwrap(), a);
        }

        #[test]
        fn big_values_round_trip(n in any::<i64>(), d in 1i64..i64::MAX, k in 1u32..4) {
            let r = Rational::new(n, d);
            let mut p = Rational::one();
            for _ in 0..k { p = p * &r; }
            prop_assert_eq!(p.to_string().parse::<Rational>().unwrap(), p.clone());
            if !r.is_zero() {
                let mut back = p;
                for _ in 0..k { back = back * &r.inv().unwrap(); }
                prop_assert_eq!(back, Rational::one());
            }
        }
    }

    #[test]
    fn tags_join() {
        assert_eq!(FieldTag::Q.join(FieldTag::QI), FieldTag::QI);
        assert_eq!(FieldTag::from_name("Q(i)"), Some(FieldTag::QI));
        assert_eq!(FieldTag::from_name("R"), None);
    }
}
