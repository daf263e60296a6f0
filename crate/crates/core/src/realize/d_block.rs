use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A realization of `t² + p1 t + p0` over D = `[[+, +], [-, -]]`.
///
/// Returns `[[α, 1], [-γ, -δ]]` with `α = |p1| + |p0| + 2`, `δ = α + p1` and
/// `γ = p0 + αδ`; then the trace is `-p1` and the determinant is `p0`.
/// `δ >= |p0| + 2` and `γ > 0` hold for every input.
pub fn realize_quadratic_d<S: Scalar>(p1: &S, p0: &S) -> Matrix<S> {
    let alpha = p1.abs() + p0.abs() + S::from_i64(2);
    let delta = alpha.clone() + p1.clone();
    let gamma = p0.clone() + alpha.clone() * delta.clone();
    Matrix::from_rows(vec![vec![alpha, S::one()], vec![-gamma, -delta]])
        .expect("2x2 with finite entries")
}
