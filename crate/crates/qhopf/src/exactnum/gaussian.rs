use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{DivisionByZero, FieldTag, ParseError, Rational};

/// An element `re + im*i` of the Gaussian field ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    re: Rational,
    im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Gaussian {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Gaussian {
        Gaussian { re, im: Rational::zero() }
    }

    pub fn i() -> Gaussian {
        Gaussian { re: Rational::zero(), im: Rational::one() }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn conj(&self) -> Gaussian {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    /// The smallest supported field containing this value.
    pub fn field_tag(&self) -> FieldTag {
        if self.im.is_zero() {
            FieldTag::Q
        } else {
            FieldTag::QI
        }
    }

    pub fn inverse(&self) -> Result<Gaussian, DivisionByZero> {
        if self.im.is_zero() {
            return self.re.recip().map(Gaussian::real).ok_or(DivisionByZero);
        }
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let scale = norm.recip().ok_or(DivisionByZero)?;
        Ok(Gaussian { re: &self.re * &scale, im: -&(&self.im * &scale) })
    }
}

impl Zero for Gaussian {
    fn zero() -> Gaussian {
        Gaussian::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Gaussian {
        Gaussian::real(Rational::one())
    }
}

impl From<i64> for Gaussian {
    fn from(v: i64) -> Gaussian {
        Gaussian::real(Rational::from_integer(v))
    }
}

impl From<Rational> for Gaussian {
    fn from(v: Rational) -> Gaussian {
        Gaussian::real(v)
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Gaussian::real(&self.re * &rhs.re),
            (true, false) => Gaussian { re: &self.re * &rhs.re, im: &self.re * &rhs.im },
            (false, true) => Gaussian { re: &self.re * &rhs.re, im: &self.im * &rhs.re },
            (false, false) => Gaussian {
                re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
                im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
            },
        }
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $m(self, rhs: Gaussian) -> Gaussian {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $m(self, rhs: &Gaussian) -> Gaussian {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Gaussian> for Gaussian {
    fn add_assign(&mut self, rhs: &Gaussian) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        match self.im.signum() {
            0 => Ok(()),
            s if s > 0 => write!(f, "+{}*i", self.im),
            _ => write!(f, "-{}*i", self.im.abs()),
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Gaussian, ParseError> {
        let (re, pos) = Rational::parse_prefix(text, 0)?;
        let bytes = text.as_bytes();
        if pos == bytes.len() {
            return Ok(Gaussian::real(re));
        }
        let negative = match bytes[pos] {
            b'+' => false,
            b'-' => true,
            _ => return Err(ParseError::new(pos, "expected '+', '-' or end of input")),
        };
        let (mut im, after) = Rational::parse_prefix(text, pos + 1)?;
        if negative {
            im = -im;
        }
        if !text[after..].starts_with("*i") {
            return Err(ParseError::new(after, "expected \"*i\""));
        }
        if after + 2 != bytes.len() {
            return Err(ParseError::new(after + 2, "trailing input"));
        }
        Ok(Gaussian { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Gaussian {
        s.parse().unwrap()
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Gaussian::i() * &Gaussian::i(), Gaussian::from(-1));
    }

    #[test]
    fn omega_times_conjugate() {
        // (a+bi)(a-bi) = a^2 + b^2 with a = b = 1/2
        let w = g("1/2+1/2*i");
        assert_eq!(&w * &w.conj(), g("1/2"));
    }

    #[test]
    fn inverses() {
        assert_eq!(g("2").inverse().unwrap(), g("1/2"));
        assert_eq!(Gaussian::i().inverse().unwrap(), g("0-1*i"));
        // conj / |w|^2 with |w|^2 = 1/2
        assert_eq!(g("1/2+1/2*i").inverse().unwrap(), g("1-1*i"));
        assert_eq!(g("1/2-1/2*i").inverse().unwrap(), g("1+1*i"));
        assert!(Gaussian::zero().inverse().is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(g("1/2+1/2*i").to_string(), "1/2+1/2*i");
        assert_eq!(g("0").to_string(), "0");
        assert_eq!(g("-3/4").to_string(), "-3/4");
        assert_eq!(g("2/4+-6/8*i").to_string(), "1/2-3/4*i");
        assert_eq!(g("0-0*i").to_string(), "0");
        assert_eq!(g("+5").to_string(), "5");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let cases = [("", 0), ("1/2+", 4), ("1+2", 3), ("1+2*j", 3), ("1+2*i ", 5), ("x", 0), ("1 ", 1), ("1/-2", 2)];
        for (text, offset) in cases {
            let err = text.parse::<Gaussian>().unwrap_err();
            assert_eq!(err.offset, offset, "{text:?}: {err}");
        }
    }

    #[test]
    fn field_tags() {
        assert_eq!(g("3").field_tag(), FieldTag::Q);
        assert_eq!(g("3+1*i").field_tag(), FieldTag::QI);
        assert_eq!((&g("1+1*i") * &g("1-1*i")).field_tag(), FieldTag::Q);
    }
}
