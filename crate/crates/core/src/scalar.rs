//! Numbers that are exact rationals when possible and floats otherwise.
//!
//! Eigenvalue data entered as integers or ratios such as `7/2` stays exact through all of
//! the combinatorics and the polytope constructions. Decimal input is kept as `f64`.
//! Arithmetic between an exact and a float operand produces a float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational type used throughout.
pub type Rational = Ratio<i128>;

/// A real number, either exact or floating point.
#[derive(Clone, Copy, Debug)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Exact(Rational::from_integer(v as i128))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(Rational::new(num as i128, den as i128))
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(f) => *f,
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Scalar::Exact(r) => Scalar::Exact(if *r < Rational::zero() { -*r } else { *r }),
            Scalar::Float(f) => Scalar::Float(f.abs()),
        }
    }

    /// Midpoint of two values.
    pub fn midpoint(&self, other: &Scalar) -> Scalar {
        (*self + *other) / Scalar::int(2)
    }

    fn binary(
        self,
        rhs: Scalar,
        exact: impl Fn(Rational, Rational) -> Rational,
        float: impl Fn(f64, f64) -> f64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(exact(a, b)),
            (a, b) => Scalar::Float(float(a.to_f64(), b.to_f64())),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |a, b| a / b, |a, b| a / b)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            (a, b) => a.to_f64().total_cmp(&b.to_f64()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `3`, `-2`, `7/2` exactly and anything else `f64` accepts as a float.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidLambda(format!("cannot parse number {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i128 = num.trim().parse().map_err(|_| bad())?;
            let den: i128 = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(Error::InvalidLambda(format!("zero denominator in {s:?}")));
            }
            return Ok(Scalar::Exact(Rational::new(num, den)));
        }
        if let Ok(v) = s.parse::<i128>() {
            return Ok(Scalar::Exact(Rational::from_integer(v)));
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        if !v.is_finite() {
            return Err(Error::InvalidLambda(format!("non-finite number {s:?}")));
        }
        Ok(Scalar::Float(v))
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Float(v)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl Serialize for Scalar {
    /// Integers and floats become JSON numbers; proper fractions become strings like `"7/2"`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) if r.is_integer() => match r.numer().to_i64() {
                Some(v) => serializer.serialize_i64(v),
                None => serializer.serialize_str(&self.to_string()),
            },
            Scalar::Exact(_) => serializer.serialize_str(&self.to_string()),
            Scalar::Float(f) => serializer.serialize_f64(*f),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl Visitor<'_> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or a string like \"7/2\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
                Ok(Scalar::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
                Ok(Scalar::Exact(Rational::from_integer(v as i128)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Scalar, E> {
                Ok(Scalar::Float(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ScalarVisitor)
    }
}
