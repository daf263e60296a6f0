//! Constructive realization of monic polynomials and refined inertias over
//! the sign patterns T, D and their block-diagonal compositions, together
//! with exact certificates for the patterns that fail to be spectrally
//! arbitrary.
//!
//! The numeric core is generic over [`Scalar`]: exact [`BigRational`]
//! arithmetic for certificates and closed-form constructions, `f64` (or
//! `f32`) for pipelines that go through root finding.

pub mod error;
pub mod matrix;
pub mod pattern;
pub mod poly;
pub mod realize;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{block_diag, conforms, Matrix};
pub use num_rational::BigRational;
pub use pattern::{builtin_pattern, is_superpattern, PatternName, Sign, SignPattern};
pub use poly::{
    char_poly, char_poly_exact, divisors_degree6, find_roots, poly_mul, refined_inertia_of,
    roots_to_quadratics, Polynomial, Quadratic, RefinedInertia, RootMultiset,
};
pub use scalar::Scalar;

/// Exact rational scalar.
pub type Rational = BigRational;
pub type RationalMatrix = Matrix<BigRational>;
pub type FloatMatrix = Matrix<f64>;
pub type RationalPolynomial = Polynomial<BigRational>;
pub type FloatPolynomial = Polynomial<f64>;

/// Default tolerance for root residuals and eigenvalue classification.
pub const DEFAULT_TOL: f64 = 1e-9;
