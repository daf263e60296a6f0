use num_rational::BigRational;

use super::Polynomial;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `det(tI - M)` by the Faddeev–LeVerrier trace recursion.
///
/// Exact on the rational backend. With `M_0 = 0` and `c_n = 1`:
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
pub fn char_poly<S: Scalar>(m: &Matrix<S>) -> Polynomial<S> {
    let n = m.order();
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut acc = Matrix::<S>::zeros(n);
    for k in 1..=n {
        let mut next = m * &acc;
        let shift = coeffs[n + 1 - k].clone();
        for i in 0..n {
            let d = next.get(i, i).clone() + shift.clone();
            next.set(i, i, d);
        }
        let am = m * &next;
        coeffs[n - k] = -am.trace() / S::from_i64(k as i64);
        acc = next;
    }
    Polynomial::new(coeffs).expect("leading coefficient is one")
}

/// The exact characteristic polynomial of any finite matrix: entries are
/// lifted to rationals, the matrix is split into its finest diagonal blocks,
/// and the block polynomials are multiplied.
pub fn char_poly_exact<S: Scalar>(m: &Matrix<S>) -> Result<Polynomial<BigRational>> {
    let exact: Matrix<BigRational> = m.convert()?;
    Ok(exact
        .diagonal_blocks()
        .into_iter()
        .map(|(start, len)| char_poly(&exact.principal_block(start, len)))
        .fold(Polynomial::one(), |acc, p| &acc * &p))
}

/// Exact test for `char_poly(m) = t^n`.
pub fn is_nilpotent<S: Scalar>(m: &Matrix<S>) -> Result<bool> {
    let p = char_poly_exact(m)?;
    Ok(p.zero_root_multiplicity() == p.degree())
}
