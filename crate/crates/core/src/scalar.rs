//! The numeric backends the crate is generic over.
//!
//! Everything structural (matrices, polynomials, closed-form realizations,
//! Faddeev–LeVerrier) is written once against [`Scalar`]. The exact backend is
//! [`BigRational`]; the floating backends are `f64` and `f32`. Root finding is
//! inherently numeric and always runs in `f64`.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Leading coefficients of floating polynomials may deviate from one by at
/// most this much before construction is rejected.
pub const MONIC_TOLERANCE: f64 = 1e-12;

pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// True for backends whose arithmetic is exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Nearest representable value of an exact rational.
    fn from_ratio(r: &BigRational) -> Self;

    /// The exact rational value of `self`, or `None` when not finite.
    fn to_ratio(&self) -> Option<BigRational>;

    fn to_f64(&self) -> f64;

    fn is_finite(&self) -> bool;

    /// A value `s >= 0` with `s * s >= self`; `self` must be nonnegative.
    ///
    /// On floating backends this is the ordinary square root. On the exact
    /// backend it is the integer ceiling of the square root, which keeps all
    /// derived quantities rational.
    fn sqrt_upper(&self) -> Self;

    /// Accept `self` as the leading coefficient of a monic polynomial,
    /// returning the normalized leading coefficient.
    fn monic_leading(&self) -> Option<Self>;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn from_ratio(r: &BigRational) -> Self {
                ToPrimitive::to_f64(r).unwrap_or(f64::NAN) as $t
            }

            fn to_ratio(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn is_finite(&self) -> bool {
                <$t>::is_finite(*self)
            }

            fn sqrt_upper(&self) -> Self {
                self.sqrt()
            }

            fn monic_leading(&self) -> Option<Self> {
                if ((*self as f64) - 1.0).abs() <= MONIC_TOLERANCE {
                    Some(1.0)
                } else {
                    None
                }
            }

            fn to_json(&self) -> Value {
                serde_json::Number::from_f64(*self as f64)
                    .map(Value::Number)
                    .unwrap_or(Value::Null)
            }

            fn from_json(v: &Value) -> Result<Self> {
                match v {
                    Value::Number(n) => n
                        .as_f64()
                        .map(|x| x as $t)
                        .ok_or_else(|| Error::Parse(format!("not a finite number: {n}"))),
                    other => Err(Error::Parse(format!(
                        "expected a JSON number on the float backend, found {other}"
                    ))),
                }
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_ratio(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn sqrt_upper(&self) -> Self {
        let n = self.ceil().to_integer();
        if n <= BigInt::zero() {
            return BigRational::zero();
        }
        let mut s = n.sqrt();
        if &s * &s < n {
            s += 1;
        }
        BigRational::from_integer(s)
    }

    fn monic_leading(&self) -> Option<Self> {
        self.is_one().then(BigRational::one)
    }

    fn to_json(&self) -> Value {
        Value::String(format!("{}/{}", self.numer(), self.denom()))
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(<BigRational as Scalar>::from_i64(i))
                } else {
                    Err(Error::Parse(format!(
                        "rational entries must be \"p/q\" strings or integers, found {n}"
                    )))
                }
            }
            other => Err(Error::Parse(format!(
                "expected a \"p/q\" string, found {other}"
            ))),
        }
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
/// `serialize_with` adapter writing a scalar through [`Scalar::to_json`].
pub fn serialize_scalar<S: Scalar, Z: serde::Serializer>(
    x: &S,
    serializer: Z,
) -> std::result::Result<Z::Ok, Z::Error> {
    serde::Serialize::serialize(&x.to_json(), serializer)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
            let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{s}: zero denominator")));
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(
            BigInt::from_str(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?,
        ),
    };
    Ok(r)
}

/// Shorthand for the rational `p/q`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Converts between backends through the exact rational value; `None` for
/// non-finite input.
pub fn convert<S: Scalar, T: Scalar>(x: &S) -> Option<T> {
    x.to_ratio().map(|r| T::from_ratio(&r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_upper_bounds_the_root() {
        for (p, q) in [(0, 1), (1, 1), (2, 1), (9, 4), (1, 3), (1000001, 7)] {
            let v = ratio(p, q);
            let s = v.sqrt_upper();
            assert!(&s * &s >= v, "{v}");
            assert!(s >= BigRational::zero());
        }
        assert_eq!(ratio(9, 1).sqrt_upper(), ratio(3, 1));
        assert_eq!(4.0f64.sqrt_upper(), 2.0);
    }

    #[test]
    fn rational_json_uses_p_over_q() {
        let v = ratio(-6, 4);
        assert_eq!(v.to_json(), Value::String("-3/2".into()));
        assert_eq!(BigRational::from_json(&v.to_json()).unwrap(), v);
        assert_eq!(
            BigRational::from_json(&Value::from(3)).unwrap(),
            ratio(3, 1)
        );
        assert!(parse_rational("1/0").is_err());
        assert!(f64::from_json(&Value::String("1".into())).is_err());
    }

    #[test]
    fn float_monic_tolerance() {
        assert_eq!(1.0f64.monic_leading(), Some(1.0));
        assert_eq!((1.0 + 1e-13f64).monic_leading(), Some(1.0));
        assert_eq!(1.001f64.monic_leading(), None);
        assert_eq!(ratio(2, 2).monic_leading(), Some(ratio(1, 1)));
        assert_eq!(ratio(3, 2).monic_leading(), None);
    }
}
