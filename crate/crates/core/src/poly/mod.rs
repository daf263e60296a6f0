//! Monic polynomials, characteristic polynomials, root finding, quadratic
//! grouping and refined inertia.

mod charpoly;
mod divisors;
mod inertia;
mod quadratic;
mod roots;
mod squarefree;

pub use charpoly::{char_poly, char_poly_exact, is_nilpotent};
pub use divisors::{divisors_degree6, divisors_of_degree};
pub use inertia::{refined_inertia_of, refined_inertia_of_roots, RefinedInertia};
pub use quadratic::{roots_to_quadratics, Quadratic};
pub use roots::{find_roots, RootMultiset, ITERATION_CAP};

use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A monic polynomial with coefficients stored in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    /// Builds a monic polynomial from ascending coefficients. Floating leading
    /// coefficients within `1e-12` of one are normalized to exactly one; any
    /// other leading coefficient is rejected.
    pub fn new(mut coeffs: Vec<S>) -> Result<Self> {
        let lead = coeffs.pop().ok_or(Error::EmptyPolynomial)?;
        let lead = lead
            .monic_leading()
            .ok_or_else(|| Error::NotMonic(lead.to_string()))?;
        if let Some(k) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::Parse(format!("coefficient {k} is not finite")));
        }
        coeffs.push(lead);
        Ok(Polynomial { coeffs })
    }

    /// `t^n + c[n-1] t^{n-1} + … + c[0]` from the non-leading coefficients.
    pub fn from_lower(mut lower: Vec<S>) -> Result<Self> {
        lower.push(S::one());
        Polynomial::new(lower)
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![S::one()],
        }
    }

    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![S::zero(); degree + 1];
        coeffs[degree] = S::one();
        Polynomial { coeffs }
    }

    /// `t - root`
    pub fn linear(root: S) -> Self {
        Polynomial {
            coeffs: vec![-root, S::one()],
        }
    }

    /// `t² + a t + b`
    pub fn quadratic(a: S, b: S) -> Self {
        Polynomial {
            coeffs: vec![b, a, S::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero above the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn max_abs_coeff(&self) -> S {
        self.coeffs
            .iter()
            .fold(S::zero(), |m, c| S::max_of(m, c.abs()))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial<S>>) -> Self {
        factors
            .into_iter()
            .fold(Polynomial::one(), |acc, f| &acc * f)
    }

    pub fn convert<T: Scalar>(&self) -> Result<Polynomial<T>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(scalar::convert::<S, T>)
            .collect::<Option<Vec<T>>>()
            .ok_or_else(|| Error::Parse("non-finite coefficient".into()))?;
        Polynomial::new(coeffs)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `t^k` for `k = zero_root_multiplicity()`.
    pub fn strip_zero_roots(&self) -> Self {
        let k = self.zero_root_multiplicity();
        Polynomial {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Maximum coefficient deviation from `reference`, relative to the
    /// largest coefficient of `reference` (floored at one). Differences are
    /// taken exactly before rounding to `f64`.
    pub fn relative_error(&self, reference: &Polynomial<S>) -> f64 {
        let deg = self.degree().max(reference.degree());
        let (Some(mine), Some(theirs)) = (self.to_ratios(), reference.to_ratios()) else {
            return f64::INFINITY;
        };
        let zero = BigRational::from_integer(0.into());
        let at = |v: &[BigRational], i: usize| v.get(i).cloned().unwrap_or_else(|| zero.clone());
        let mut max_diff: BigRational = zero.clone();
        for i in 0..=deg {
            let d: BigRational = Signed::abs(&(at(&mine, i) - at(&theirs, i)));
            if d > max_diff {
                max_diff = d;
            }
        }
        let scale = reference.max_abs_coeff().to_f64().max(1.0);
        Scalar::to_f64(&max_diff) / scale
    }

    fn to_ratios(&self) -> Option<Vec<BigRational>> {
        self.coeffs.iter().map(Scalar::to_ratio).collect()
    }
}

impl<'a, S: Scalar> Mul for &'a Polynomial<S> {
    type Output = Polynomial<S>;

    fn mul(self, rhs: &'a Polynomial<S>) -> Polynomial<S> {
        let mut coeffs = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial { coeffs }
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Polynomial<S>;

    fn mul(self, rhs: Polynomial<S>) -> Polynomial<S> {
        &self * &rhs
    }
}

/// Convolution product of two monic polynomials.
pub fn poly_mul<S: Scalar>(p: &Polynomial<S>, q: &Polynomial<S>) -> Polynomial<S> {
    p * q
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    coeffs: Vec<serde_json::Value>,
}

impl<S: Scalar> Serialize for Polynomial<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        PolynomialJson {
            coeffs: self.coeffs.iter().map(Scalar::to_json).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Polynomial<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(S::from_json)
            .collect::<Result<Vec<S>>>()
            .map_err(D::Error::custom)?;
        Polynomial::new(coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn q(a: i64, b: i64) -> Polynomial<BigRational> {
        Polynomial::quadratic(ratio(a, 1), ratio(b, 1))
    }

    fn ints(c: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(c.iter().map(|&x| ratio(x, 1)).collect()).unwrap()
    }

    /// Schoolbook convolution written independently of `Mul`.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly_mul(&q(0, 1), &q(0, -1)), ints(&[-1, 0, 0, 0, 1]));
        let expected = convolve(&[1, 1, 1], &[2, -1, 1]);
        assert_eq!(expected, vec![2, 1, 2, 0, 1]);
        assert_eq!(poly_mul(&q(1, 1), &q(-1, 2)), ints(&expected));
        let p = q(3, -7);
        assert_eq!(poly_mul(&p, &Polynomial::one()), p);
    }

    #[test]
    fn monic_normalization() {
        assert!(Polynomial::new(vec![2.0, 1.0]).is_ok());
        let p = Polynomial::new(vec![1.0, 1.0 + 5e-13]).unwrap();
        assert_eq!(p.coeffs()[1], 1.0);
        assert!(matches!(
            Polynomial::new(vec![1.0, 1.01]),
            Err(Error::NotMonic(_))
        ));
        assert!(matches!(
            Polynomial::<f64>::new(vec![]),
            Err(Error::EmptyPolynomial)
        ));
        assert!(Polynomial::new(vec![ratio(1, 1), ratio(2, 1)]).is_err());
    }

    #[test]
    fn display_and_zero_roots() {
        let p = ints(&[0, 0, -1, 0, 1]);
        assert_eq!(p.to_string(), "t^4 - t^2");
        assert_eq!(p.zero_root_multiplicity(), 2);
        assert_eq!(p.strip_zero_roots(), ints(&[-1, 0, 1]));
        assert_eq!(Polynomial::<BigRational>::monomial(3).to_string(), "t^3");
    }

    #[test]
    fn relative_error_is_exact() {
        let a = ints(&[2, 1, 1]);
        let b = ints(&[2, 1, 1]);
        assert_eq!(a.relative_error(&b), 0.0);
        let c = ints(&[3, 1, 1]);
        assert_eq!(c.relative_error(&a), 0.5);
    }

    #[test]
    fn json_round_trip() {
        let p = Polynomial::new(vec![ratio(1, 3), ratio(-2, 1), ratio(1, 1)]).unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"coeffs":["1/3","-2/1","1/1"]}"#);
        assert_eq!(
            serde_json::from_str::<Polynomial<BigRational>>(&js).unwrap(),
            p
        );
        let f: Polynomial<f64> = serde_json::from_str(r#"{"coeffs":[-1,0,1]}"#).unwrap();
        assert_eq!(f.degree(), 2);
        assert!(serde_json::from_str::<Polynomial<f64>>(r#"{"coeffs":[-1,0,2]}"#).is_err());
    }
}
