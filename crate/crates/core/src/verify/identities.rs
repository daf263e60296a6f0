//! Exact randomized checks of the closed forms for `a₃` and `a₅` on T and T′.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pattern::{builtin_pattern, PatternName, Sign, SignPattern};
use crate::poly::char_poly;
use crate::realize::realize_obs2;

/// Largest numerator and denominator used when sampling entries.
pub const SAMPLE_BOUND: i64 = 100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheckReport {
    pub pattern: SignPattern,
    pub samples: usize,
    pub seed: u64,
    pub all_passed: bool,
    pub first_failure: Option<Matrix<BigRational>>,
}

/// A random magnitude `k/ℓ` with `1 <= k, ℓ <= SAMPLE_BOUND`.
pub fn random_magnitude<R: Rng>(rng: &mut R) -> BigRational {
    let k = rng.gen_range(1..=SAMPLE_BOUND);
    let l = rng.gen_range(1..=SAMPLE_BOUND);
    BigRational::new(k.into(), l.into())
}

/// A random rational matrix with exactly the signs of `pattern`.
pub fn sample_conforming<R: Rng>(pattern: &SignPattern, rng: &mut R) -> Matrix<BigRational> {
    let n = pattern.order();
    let entries = (0..n * n)
        .map(|k| match pattern.get(k / n, k % n) {
            Sign::Zero => BigRational::zero(),
            Sign::Plus => random_magnitude(rng),
            Sign::Minus => -random_magnitude(rng),
        })
        .collect();
    Matrix::new(n, entries).expect("rational entries are finite")
}

/// Closed forms `(a₃, a₅)` for a 6×6 matrix with the zero structure of T′:
/// `a₃ = -r₁₂ r₂₃ r₃₁ + (r₁₁ + r₂₂) r₅₆ r₆₅`, `a₅ = -(r₁₁ + r₂₂)`.
/// For T the entry `r₃₁` is zero and the first term drops.
pub fn closed_form_a3_a5(r: &Matrix<BigRational>) -> (BigRational, BigRational) {
    let e = |i: usize, j: usize| r.get(i - 1, j - 1).clone();
    let tr12 = e(1, 1) + e(2, 2);
    let a3 = -(e(1, 2) * e(2, 3) * e(3, 1)) + tr12.clone() * e(5, 6) * e(6, 5);
    (a3, -tr12)
}

/// Checks one sample against its pattern. A sample that does not conform is
/// rejected with an error before any coefficient is compared.
pub fn identity_holds(r: &Matrix<BigRational>, pattern: &SignPattern) -> Result<bool> {
    if pattern.order() != 6 {
        return Err(Error::DimensionMismatch {
            expected: 6,
            found: pattern.order(),
        });
    }
    if !r.conforms_to(pattern)? {
        return Err(Error::Precondition(
            "sample does not conform to the pattern".into(),
        ));
    }
    let p = char_poly(r);
    let (a3, a5) = closed_form_a3_a5(r);
    Ok(p.coeff(3) == a3 && p.coeff(5) == a5)
}

/// `a₃ = a₅ = 0` cannot happen on a matrix with every entry of T′ nonzero.
fn not_both_zero(r: &Matrix<BigRational>) -> bool {
    let p = char_poly(r);
    !(p.coeff(3).is_zero() && p.coeff(5).is_zero())
}

fn run(name: PatternName, samples: usize, seed: u64) -> Result<IdentityCheckReport> {
    if samples == 0 {
        return Err(Error::Precondition("samples must be at least 1".into()));
    }
    let pattern = builtin_pattern(name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first_failure = None;
    for k in 0..samples {
        let mut r = sample_conforming(&pattern, &mut rng);
        if k % 4 == 3 {
            // trace-free leading 2×2 block, so that a₅ = 0
            let r11 = r.get(0, 0).clone();
            r = r.with_entry(1, 1, -r11)?;
        }
        let ok =
            identity_holds(&r, &pattern)? && (name != PatternName::TPrime || not_both_zero(&r));
        if !ok {
            first_failure = Some(r);
            break;
        }
    }
    Ok(IdentityCheckReport {
        pattern,
        samples,
        seed,
        all_passed: first_failure.is_none(),
        first_failure,
    })
}

/// Exact check of `a₃ = (r₁₁+r₂₂) r₅₆ r₆₅` and `a₅ = -(r₁₁+r₂₂)` over T.
pub fn check_identity_t(samples: usize, seed: u64) -> Result<IdentityCheckReport> {
    run(PatternName::T, samples, seed)
}

/// Exact check of the T′ closed forms, plus `(a₃, a₅) ≠ (0, 0)` per sample.
pub fn check_identity_tprime(samples: usize, seed: u64) -> Result<IdentityCheckReport> {
    run(PatternName::TPrime, samples, seed)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NilpotenceLiftReport {
    pub samples: usize,
    pub seed: u64,
    /// How many samples had every diagonal block nilpotent.
    pub nilpotent_samples: usize,
    pub all_passed: bool,
}

/// A nilpotent realization of D: `[[a, a s], [-a/s, -a]]`.
fn nilpotent_d<R: Rng>(rng: &mut R) -> Matrix<BigRational> {
    let a = random_magnitude(rng);
    let s = random_magnitude(rng);
    Matrix::from_rows(vec![
        vec![a.clone(), a.clone() * s.clone()],
        vec![-(a.clone() / s), -a],
    ])
    .expect("2×2")
}

/// For random block-diagonal matrices diag(R, D₁, D₂), with R either over T′
/// or a fixed nilpotent realization of T, checks
/// that the whole matrix is nilpotent exactly when every block is. The
/// characteristic polynomial of the whole matrix is computed without using
/// its block structure.
pub fn check_nilpotence_lift(samples: usize, seed: u64) -> Result<NilpotenceLiftReport> {
    let tprime = builtin_pattern(PatternName::TPrime)?;
    let d = builtin_pattern(PatternName::D)?;
    let zero = BigRational::zero();
    let (_, nilpotent_t) = realize_obs2(&zero, &zero, &zero)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nilpotent = |m: &Matrix<BigRational>| {
        let p = char_poly(m);
        p.coeffs()[..p.degree()].iter().all(Zero::is_zero)
    };
    let mut nilpotent_samples = 0;
    let mut all_passed = true;
    for k in 0..samples {
        let lead = if (k >> 2) & 1 == 1 {
            nilpotent_t.clone()
        } else {
            sample_conforming(&tprime, &mut rng)
        };
        let mut blocks = vec![lead];
        for j in 0..2 {
            blocks.push(if (k >> j) & 1 == 1 {
                nilpotent_d(&mut rng)
            } else {
                sample_conforming(&d, &mut rng)
            });
        }
        let blocks_nilpotent = blocks.iter().all(nilpotent);
        let whole = Matrix::block_diag(&blocks)?;
        if blocks_nilpotent {
            nilpotent_samples += 1;
        }
        if nilpotent(&whole) != blocks_nilpotent {
            all_passed = false;
        }
    }
    Ok(NilpotenceLiftReport {
        samples,
        seed,
        nilpotent_samples,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn small_runs_pass() {
        let t = check_identity_t(60, 42).unwrap();
        assert!(t.all_passed && t.first_failure.is_none());
        let tp = check_identity_tprime(60, 7).unwrap();
        assert!(tp.all_passed);
        assert_eq!(tp.samples, 60);
    }

    #[test]
    fn corrupted_sample_is_rejected() {
        let pattern = builtin_pattern(PatternName::T).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = sample_conforming(&pattern, &mut rng);
        assert!(identity_holds(&r, &pattern).unwrap());
        let bad = r.with_entry(2, 3, ratio(0, 1)).unwrap();
        assert!(matches!(
            identity_holds(&bad, &pattern),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn trace_free_tprime_sample_has_nonzero_a3() {
        let pattern = builtin_pattern(PatternName::TPrime).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let r = sample_conforming(&pattern, &mut rng);
        let r = r.with_entry(1, 1, -r.get(0, 0).clone()).unwrap();
        let p = char_poly(&r);
        assert!(p.coeff(5).is_zero());
        let expected = -(r.get(0, 1).clone() * r.get(1, 2).clone() * r.get(2, 0).clone());
        assert_eq!(p.coeff(3), expected);
        assert!(!expected.is_zero());
    }

    #[test]
    fn closed_form_specializes_on_t() {
        let pattern = builtin_pattern(PatternName::T).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = sample_conforming(&pattern, &mut rng);
        let (a3, _) = closed_form_a3_a5(&r);
        let tr = r.get(0, 0).clone() + r.get(1, 1).clone();
        assert_eq!(a3, tr * r.get(4, 5).clone() * r.get(5, 4).clone());
    }

    #[test]
    fn nilpotence_lift() {
        let rep = check_nilpotence_lift(8, 3).unwrap();
        assert!(rep.all_passed);
        // only k = 7 has all three blocks nilpotent
        assert_eq!(rep.nilpotent_samples, 1);
    }
}
