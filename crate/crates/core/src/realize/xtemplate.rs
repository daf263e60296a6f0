//! The parametrized matrix
//!
//! ```text
//!  x1   1   0  0   0  0
//! -x4 -x2   1  0   0  0
//!   0   0   0  1   0  0
//!   0   0   0  0   1  0
//! -x6 -x5   0  0   0  1
//!  x7  x8  x9  0 -x3  0
//! ```
//!
//! whose sign pattern is T whenever all nine parameters are positive, and the
//! closed-form parameter choices that give it a prescribed characteristic
//! polynomial.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Bounded retries when re-checking positivity after rounding.
const POSITIVITY_RETRIES: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct XParams<S> {
    x: [S; 9],
}

impl<S: Scalar> XParams<S> {
    pub fn new(x: [S; 9]) -> Self {
        XParams { x }
    }

    /// The parameter `x_i`, for `i` in `1..=9`.
    pub fn x(&self, i: usize) -> &S {
        &self.x[i - 1]
    }

    pub fn as_slice(&self) -> &[S] {
        &self.x
    }

    pub fn all_positive(&self) -> bool {
        self.x.iter().all(|v| v.is_positive())
    }
}

impl<S: Scalar> Serialize for XParams<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut seq = serializer.serialize_seq(Some(9))?;
        for v in &self.x {
            seq.serialize_element(&v.to_json())?;
        }
        seq.end()
    }
}

pub fn x_matrix<S: Scalar>(p: &XParams<S>) -> Matrix<S> {
    let z = S::zero;
    let o = S::one;
    let x = |i: usize| p.x(i).clone();
    Matrix::from_rows(vec![
        vec![x(1), o(), z(), z(), z(), z()],
        vec![-x(4), -x(2), o(), z(), z(), z()],
        vec![z(), z(), z(), o(), z(), z()],
        vec![z(), z(), z(), z(), o(), z()],
        vec![-x(6), -x(5), z(), z(), z(), o()],
        vec![x(7), x(8), x(9), z(), -x(3), z()],
    ])
    .expect("finite 6x6")
}

/// Parameters giving characteristic polynomial `(t²+b)(t²+c)(t²+d)` for any
/// free `x1, x3, x8, x9`.
pub fn obs2_params<S: Scalar>(b: &S, c: &S, d: &S, x1: &S, x3: &S, x8: &S, x9: &S) -> XParams<S> {
    let s = b.clone() + c.clone() + d.clone();
    let e2 = b.clone() * c.clone() + b.clone() * d.clone() + c.clone() * d.clone();
    let e3 = b.clone() * c.clone() * d.clone();
    let base5 = e2 - s.clone() * x3.clone() + x3.clone() * x3.clone();
    let x2 = x1.clone();
    let x4 = s.clone() + x1.clone() * x1.clone() - x3.clone();
    let x5 = base5.clone() + x9.clone();
    let x6 = x1.clone() * base5 + x8.clone() + x1.clone() * x9.clone();
    let x7 = -e3 + x1.clone() * x8.clone() - s * x9.clone() + x3.clone() * x9.clone();
    XParams::new([
        x1.clone(),
        x2,
        x3.clone(),
        x4,
        x5,
        x6,
        x7,
        x8.clone(),
        x9.clone(),
    ])
}

/// All-positive parameters with characteristic polynomial
/// `(t²+b)(t²+c)(t²+d)`, for arbitrary real `b, c, d`.
///
/// `x3 = 1`, `x1 = 1 + sqrt(max(0, 1 - (b+c+d)))` (an upper bound of the root
/// on the exact backend), then `x9` forces `x5 >= 1` and `x8` forces
/// `x7 >= 1`; `x6 = x1 x5 + x8` follows.
pub fn realize_obs2<S: Scalar>(b: &S, c: &S, d: &S) -> Result<(XParams<S>, Matrix<S>)> {
    let one = S::one();
    let zero = S::zero();
    let s = b.clone() + c.clone() + d.clone();
    let e2 = b.clone() * c.clone() + b.clone() * d.clone() + c.clone() * d.clone();
    let e3 = b.clone() * c.clone() * d.clone();
    let mut x1 = one.clone() + S::max_of(zero.clone(), one.clone() - s.clone()).sqrt_upper();
    let x3 = one.clone();
    // x5 = e2 - s + 1 + x9
    let mut x9 = S::max_of(one.clone(), one.clone() - (e2 - s.clone() + one.clone()));
    for _ in 0..POSITIVITY_RETRIES {
        // x7 = -e3 + x1 x8 - s x9 + x9
        let x8 = S::max_of(
            one.clone(),
            (one.clone() + e3.clone() + s.clone() * x9.clone() - x9.clone()) / x1.clone(),
        );
        let params = obs2_params(b, c, d, &x1, &x3, &x8, &x9);
        if params.all_positive() {
            let m = x_matrix(&params);
            return Ok((params, m));
        }
        x1 = x1.clone() + x1.clone();
        x9 = x9.clone() + x9.clone();
    }
    Err(Error::Construction(format!(
        "no positive parameters found for b = {b}, c = {c}, d = {d}"
    )))
}

/// Whether a degree-6 target passes the necessary condition for T:
/// `a3` and `a5` vanish together or share a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GateStatus {
    BothZero,
    SameSign,
    Violated,
}

pub fn t_gate<S: Scalar>(p: &Polynomial<S>) -> GateStatus {
    let (a3, a5) = (p.coeff(3), p.coeff(5));
    match (a3.is_zero(), a5.is_zero()) {
        (true, true) => GateStatus::BothZero,
        (false, false) if a3.is_positive() == a5.is_positive() => GateStatus::SameSign,
        _ => GateStatus::Violated,
    }
}

/// Parameters giving the monic degree-6 characteristic polynomial `a` for any
/// free `x1, x8, x9`; requires `a5 != 0`.
pub fn obs3_params<S: Scalar>(a: &Polynomial<S>, x1: &S, x8: &S, x9: &S) -> Result<XParams<S>> {
    if a.degree() != 6 {
        return Err(Error::Precondition(format!(
            "target must have degree 6, found {}",
            a.degree()
        )));
    }
    let c = |i: usize| a.coeff(i);
    let (a0, a1, a2, a3, a4, a5) = (c(0), c(1), c(2), c(3), c(4), c(5));
    if a5.is_zero() {
        return Err(Error::Gate {
            a3: a3.to_string(),
            a5: a5.to_string(),
        });
    }
    let a5sq = a5.clone() * a5.clone();
    let x2 = a5.clone() + x1.clone();
    let x3 = a3.clone() / a5.clone();
    let x4 = (-a3.clone()
        + a4.clone() * a5.clone()
        + a5sq.clone() * x1.clone()
        + a5.clone() * x1.clone() * x1.clone())
        / a5.clone();
    let x5 = (a3.clone() * a3.clone() - a3.clone() * a4.clone() * a5.clone()
        + a2.clone() * a5sq.clone()
        + a5sq.clone() * x9.clone())
        / a5sq.clone();
    let x6 = (a1 * a5sq.clone() + a3.clone() * a3.clone() * x1.clone()
        - a3.clone() * a4.clone() * a5.clone() * x1.clone()
        + a2 * a5sq.clone() * x1.clone()
        + a5sq.clone() * x8.clone()
        + a5sq.clone() * a5.clone() * x9.clone()
        + a5sq.clone() * x1.clone() * x9.clone())
        / a5sq;
    let x7 = (-a0 * a5.clone() + a5.clone() * x1.clone() * x8.clone() + a3 * x9.clone()
        - a4 * a5.clone() * x9.clone())
        / a5;
    Ok(XParams::new([
        x1.clone(),
        x2,
        x3,
        x4,
        x5,
        x6,
        x7,
        x8.clone(),
        x9.clone(),
    ]))
}

/// All-positive parameters realizing a monic degree-6 target with
/// `a3 / a5 > 0`.
///
/// `x1 = 1 + |a5| + sqrt(max(0, a3/a5 - a4))` makes `x2` and `x4` positive,
/// `x9` then forces `x5 >= 1`, and `x8` forces `x6 >= 1` and `x7 >= 1` (both
/// grow with `x8`).
pub fn realize_obs3<S: Scalar>(a: &Polynomial<S>) -> Result<(XParams<S>, Matrix<S>)> {
    if a.degree() != 6 {
        return Err(Error::Precondition(format!(
            "target must have degree 6, found {}",
            a.degree()
        )));
    }
    if t_gate(a) != GateStatus::SameSign {
        return Err(Error::Gate {
            a3: a.coeff(3).to_string(),
            a5: a.coeff(5).to_string(),
        });
    }
    let one = S::one();
    let zero = S::zero();
    let (a3, a4, a5) = (a.coeff(3), a.coeff(4), a.coeff(5));
    let ratio = a3 / a5.clone();
    let mut x1 = one.clone() + a5.abs() + S::max_of(zero.clone(), ratio - a4).sqrt_upper();
    for _ in 0..POSITIVITY_RETRIES {
        let base = obs3_params(a, &x1, &zero, &zero)?;
        let x9 = S::max_of(one.clone(), one.clone() - base.x(5).clone());
        let base = obs3_params(a, &x1, &zero, &x9)?;
        // x6 grows like x8 and x7 like x1 x8
        let x8 = S::max_of(
            S::max_of(one.clone(), one.clone() - base.x(6).clone()),
            (one.clone() - base.x(7).clone()) / x1.clone(),
        );
        let params = obs3_params(a, &x1, &x8, &x9)?;
        if params.all_positive() {
            let m = x_matrix(&params);
            return Ok((params, m));
        }
        x1 = x1.clone() + x1.clone();
    }
    Err(Error::Construction(format!(
        "no positive parameters found for {a}"
    )))
}
