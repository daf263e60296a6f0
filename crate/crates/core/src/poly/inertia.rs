use std::fmt;

use serde::{Deserialize, Serialize};

use super::{char_poly_exact, find_roots, RootMultiset};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Eigenvalue counts: positive real part, negative real part, zero, and
/// nonzero purely imaginary conjugate pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RefinedInertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_imag: usize,
}

impl RefinedInertia {
    pub const fn new(n_plus: usize, n_minus: usize, n_zero: usize, n_imag: usize) -> Self {
        RefinedInertia {
            n_plus,
            n_minus,
            n_zero,
            n_imag,
        }
    }

    /// The matrix order this inertia describes: `n₊ + n₋ + n₀ + 2nᵢ`.
    pub fn total(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero + 2 * self.n_imag
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &RefinedInertia) -> bool {
        self.n_plus <= other.n_plus
            && self.n_minus <= other.n_minus
            && self.n_zero <= other.n_zero
            && self.n_imag <= other.n_imag
    }

    pub fn checked_sub(&self, other: &RefinedInertia) -> Option<RefinedInertia> {
        Some(RefinedInertia {
            n_plus: self.n_plus.checked_sub(other.n_plus)?,
            n_minus: self.n_minus.checked_sub(other.n_minus)?,
            n_zero: self.n_zero.checked_sub(other.n_zero)?,
            n_imag: self.n_imag.checked_sub(other.n_imag)?,
        })
    }

    pub fn add(&self, other: &RefinedInertia) -> RefinedInertia {
        RefinedInertia {
            n_plus: self.n_plus + other.n_plus,
            n_minus: self.n_minus + other.n_minus,
            n_zero: self.n_zero + other.n_zero,
            n_imag: self.n_imag + other.n_imag,
        }
    }

    /// Every tuple with the given total, in lexicographic order.
    pub fn all_with_total(total: usize) -> Vec<RefinedInertia> {
        let mut out = Vec::new();
        for n_imag in 0..=total / 2 {
            let rest = total - 2 * n_imag;
            for n_plus in 0..=rest {
                for n_minus in 0..=rest - n_plus {
                    out.push(RefinedInertia::new(
                        n_plus,
                        n_minus,
                        rest - n_plus - n_minus,
                        n_imag,
                    ));
                }
            }
        }
        out.sort_by_key(|r| (r.n_plus, r.n_minus, r.n_zero, r.n_imag));
        out
    }
}

impl fmt::Display for RefinedInertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.n_plus, self.n_minus, self.n_zero, self.n_imag
        )
    }
}

/// Classifies roots: `|z| <= tol` is zero; `|Re| <= tol < |Im|` is purely
/// imaginary (counted per conjugate pair); otherwise by the sign of `Re`.
pub fn refined_inertia_of_roots(roots: &RootMultiset, tol: f64) -> RefinedInertia {
    let mut r = RefinedInertia::default();
    let mut imag = 0;
    for z in roots.roots() {
        if z.norm() <= tol {
            r.n_zero += 1;
        } else if z.re.abs() <= tol {
            imag += 1;
        } else if z.re > 0.0 {
            r.n_plus += 1;
        } else {
            r.n_minus += 1;
        }
    }
    r.n_imag = imag / 2;
    r
}

/// Refined inertia of a square matrix.
///
/// The characteristic polynomial is computed exactly, so zero eigenvalues
/// are counted exactly; the remaining factor is solved numerically.
pub fn refined_inertia_of<S: Scalar>(m: &Matrix<S>, tol: f64) -> Result<RefinedInertia> {
    let p = char_poly_exact(m)?;
    let zeros = p.zero_root_multiplicity();
    let rest = p.strip_zero_roots();
    let mut inertia = if rest.degree() == 0 {
        RefinedInertia::default()
    } else {
        refined_inertia_of_roots(&find_roots(&rest, tol)?, tol)
    };
    inertia.n_zero += zeros;
    Ok(inertia)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::block_diag;
    use crate::scalar::ratio;
    use num_complex::Complex64;
    use num_rational::BigRational;

    #[test]
    fn diagonal_example() {
        let m = Matrix::diagonal(&[ratio(1, 1), ratio(-1, 1), ratio(0, 1)]).unwrap();
        assert_eq!(
            refined_inertia_of(&m, 1e-9).unwrap(),
            RefinedInertia::new(1, 1, 1, 0)
        );
    }

    #[test]
    fn counterexample_roots_classify() {
        let s3 = 3f64.sqrt() / 2.0;
        let s7 = 7f64.sqrt() / 2.0;
        let roots = vec![
            Complex64::new(-0.5, s3),
            Complex64::new(-0.5, -s3),
            Complex64::new(0.5, s7),
            Complex64::new(0.5, -s7),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ];
        let r = RootMultiset::new(roots, 1e-9).unwrap();
        assert_eq!(
            refined_inertia_of_roots(&r, 1e-9),
            RefinedInertia::new(3, 3, 0, 1)
        );
    }

    #[test]
    fn tuple_count_with_total_eight() {
        let all = RefinedInertia::all_with_total(8);
        assert_eq!(all.len(), 95);
        assert!(all.iter().all(|r| r.total() == 8));
    }

    #[test]
    fn block_sum() {
        let a: Matrix<BigRational> = Matrix::from_rows(vec![
            vec![ratio(0, 1), ratio(1, 1)],
            vec![ratio(-4, 1), ratio(0, 1)],
        ])
        .unwrap();
        let b = Matrix::diagonal(&[ratio(2, 1), ratio(-3, 1), ratio(0, 1)]).unwrap();
        let ia = refined_inertia_of(&a, 1e-9).unwrap();
        let ib = refined_inertia_of(&b, 1e-9).unwrap();
        assert_eq!(ia, RefinedInertia::new(0, 0, 0, 1));
        let m = block_diag(&[a, b]).unwrap();
        assert_eq!(refined_inertia_of(&m, 1e-9).unwrap(), ia.add(&ib));
    }

    #[test]
    fn ordering_helpers() {
        let nu = RefinedInertia::new(3, 3, 0, 1);
        let mu = RefinedInertia::new(3, 3, 0, 0);
        assert!(mu.le(&nu));
        assert_eq!(nu.checked_sub(&mu), Some(RefinedInertia::new(0, 0, 0, 1)));
        assert_eq!(mu.checked_sub(&nu), None);
    }
}
