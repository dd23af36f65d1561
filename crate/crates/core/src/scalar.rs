//! Scalar abstraction shared by every construction in the crate.
//!
//! Exact types (`BigRational`) compare by equality and ignore tolerances;
//! float types compare within the tolerance supplied by the caller.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational used for all exact constructions.
pub type Rational = BigRational;

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// True when arithmetic is exact and equality is meaningful.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn to_f64(&self) -> f64;

    /// Largest integer not exceeding `self`.
    fn floor_int(&self) -> BigInt;

    fn is_integer(&self) -> bool;

    /// `self == other` for exact types, `|self - other| <= tol` otherwise.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// Exact square root when `self` is a perfect square in this field.
    fn sqrt_exact(&self) -> Option<Self>;

    fn is_finite_value(&self) -> bool {
        true
    }

    fn from_rational(r: &Rational) -> Self;

    /// Exact rational view, available only for exact types.
    fn as_rational(&self) -> Option<Rational>;

    /// Parse `p/q`, an integer, or (for float types) a decimal literal.
    fn parse_str(s: &str) -> Result<Self>;
}

/// Parse a rational literal into any scalar type.
pub fn parse_scalar<T: Scalar>(s: &str) -> Result<T> {
    T::parse_str(s.trim())
}

fn parse_err(s: &str) -> Error {
    Error::Parse {
        line: 0,
        msg: format!("invalid number {s:?}"),
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn floor_int(&self) -> BigInt {
                BigInt::from(Float::floor(*self) as i64)
            }

            fn is_integer(&self) -> bool {
                Float::fract(*self) == 0.0
            }

            fn approx_eq(&self, other: &Self, tol: f64) -> bool {
                ((*self - *other).abs() as f64) <= tol
            }

            fn sqrt_exact(&self) -> Option<Self> {
                (*self >= 0.0).then(|| Float::sqrt(*self))
            }

            fn is_finite_value(&self) -> bool {
                Float::is_finite(*self)
            }

            fn from_rational(r: &Rational) -> Self {
                Scalar::to_f64(r) as $t
            }

            fn as_rational(&self) -> Option<Rational> {
                None
            }

            fn parse_str(s: &str) -> Result<Self> {
                if let Some((p, q)) = s.split_once('/') {
                    let p: $t = p.trim().parse().map_err(|_| parse_err(s))?;
                    let q: $t = q.trim().parse().map_err(|_| parse_err(s))?;
                    if q == 0.0 {
                        return Err(parse_err(s));
                    }
                    Ok(p / q)
                } else {
                    s.parse().map_err(|_| parse_err(s))
                }
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Fall back to a scaled division when numerator or denominator overflow f64.
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }

    fn floor_int(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    fn is_integer(&self) -> bool {
        self.denom().is_one()
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| BigRational::new(n, d))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn parse_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(parse_err(s));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            // Terminating decimal, e.g. "0.25" or "-1.5".
            if frac_part.contains('/') || frac_part.starts_with('-') {
                return Err(parse_err(s));
            }
            let digits = format!("{int_part}{frac_part}");
            let numer: BigInt = digits.parse().map_err(|_| parse_err(s))?;
            let denom = num_traits::pow(BigInt::from(10), frac_part.len());
            return Ok(BigRational::new(numer, denom));
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| parse_err(s))?;
            let q: BigInt = q.trim().parse().map_err(|_| parse_err(s))?;
            if q.is_zero() {
                return Err(parse_err(s));
            }
            Ok(BigRational::new(p, q))
        } else {
            let p: BigInt = s.parse().map_err(|_| parse_err(s))?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Small helper used across modules: `T::from_i64(v)` for `usize` counts.
pub(crate) fn from_usize<T: Scalar>(v: usize) -> T {
    T::from_i64(v as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        let r: Rational = parse_scalar("-3/6").unwrap();
        assert_eq!(r, Rational::from_ratio(-1, 2));
        assert_eq!(parse_scalar::<Rational>("7").unwrap(), Rational::from_i64(7));
        assert_eq!(parse_scalar::<Rational>("0.25").unwrap(), Rational::from_ratio(1, 4));
        assert_eq!(parse_scalar::<Rational>("-1.5").unwrap(), Rational::from_ratio(-3, 2));
        assert!(parse_scalar::<Rational>("1/0").is_err());
        assert!(parse_scalar::<Rational>("abc").is_err());
        assert_eq!(parse_scalar::<f64>("3/4").unwrap(), 0.75);
        assert_eq!(parse_scalar::<f32>("-2").unwrap(), -2.0);
    }

    #[test]
    fn floor_and_integrality() {
        let r = Rational::from_ratio(-7, 2);
        assert_eq!(r.floor_int(), BigInt::from(-4));
        assert!(!r.is_integer());
        assert!(Rational::from_ratio(8, 4).is_integer());
        assert_eq!(Scalar::floor_int(&43.67_f64), BigInt::from(43));
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(
            Rational::from_ratio(9, 4).sqrt_exact(),
            Some(Rational::from_ratio(3, 2))
        );
        assert_eq!(Rational::from_i64(5).sqrt_exact(), None);
        assert_eq!(Rational::from_i64(-4).sqrt_exact(), None);
    }

    #[test]
    fn conversions_roundtrip() {
        let r = Rational::from_ratio(-1, 7);
        assert_eq!(Rational::from_rational(&r), r);
        assert!((f64::from_rational(&r) + 1.0 / 7.0).abs() < 1e-15);
        assert_eq!(r.as_rational(), Some(r.clone()));
        assert_eq!(0.5_f64.as_rational(), None);
    }
}
