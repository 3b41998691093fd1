//! Arbitrary-precision rational scalars.
//!
//! `Rat` wraps [`num::BigRational`], which keeps values in lowest terms with a
//! positive denominator. Every computation in this crate is exact; no floating
//! point appears anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An exact rational number, stored in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(pub BigRational);

/// Error parsing a rational from its `"p/q"` string form.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
}

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// The integer `n` as a rational.
    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// The fraction `p/q`. Panics if `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Parses `"p"` or `"p/q"` with optional leading sign. Rejects `q == 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRatError::Empty);
        }
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s)
                    .map_err(|_| ParseRatError::BadInteger(s.to_string()))?;
                Ok(Rat(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim())
                    .map_err(|_| ParseRatError::Malformed(s.to_string()))?;
                let q = BigInt::from_str(q.trim())
                    .map_err(|_| ParseRatError::Malformed(s.to_string()))?;
                if q.is_zero() {
                    return Err(ParseRatError::ZeroDenominator(s.to_string()));
                }
                Ok(Rat(BigRational::new(p, q)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rat::from_str(&s).map_err(de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rat::frac(2, -4);
        assert_eq!(r, Rat::frac(-1, 2));
        assert_eq!(r.to_string(), "-1/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3", "5/3", "-22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert_eq!(
            "1/0".parse::<Rat>(),
            Err(ParseRatError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::frac(1, 3);
        let b = Rat::frac(1, 6);
        assert_eq!(&a + &b, Rat::frac(1, 2));
        assert_eq!(&a - &b, Rat::frac(1, 6));
        assert_eq!(&a * &b, Rat::frac(1, 18));
        assert_eq!(&a / &b, Rat::int(2));
    }
}
