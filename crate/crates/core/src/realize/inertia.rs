//! Prescribed refined inertia over T and over diag(T, D).

use serde::Serialize;

use super::{realize_obs2, realize_obs3, realize_quadratic_d, t_gate, GateStatus};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{Polynomial, RefinedInertia};
use crate::scalar::Scalar;

/// Maximum number of times the cubic multiplier's scale `N` is doubled.
pub const DOUBLING_CAP: usize = 64;

/// Constant term of the D-block target for one imaginary pair. Kept apart
/// from the imaginary eigenvalues `±i, ±i√2, ±i√3` used in the T-block so
/// that no imaginary eigenvalue is repeated.
const D_IMAGINARY_SQUARE: i64 = 4;

/// Remainders `ν - μ` tried in order when the T-block gets the real part of
/// the spectrum.
const D_SHARES: [RefinedInertia; 7] = [
    RefinedInertia::new(0, 0, 0, 1),
    RefinedInertia::new(0, 0, 2, 0),
    RefinedInertia::new(1, 0, 1, 0),
    RefinedInertia::new(0, 1, 1, 0),
    RefinedInertia::new(2, 0, 0, 0),
    RefinedInertia::new(0, 2, 0, 0),
    RefinedInertia::new(1, 1, 0, 0),
];

/// The cubic multipliers, in the order they are tried.
const CUBIC_SHARES: [RefinedInertia; 4] = [
    RefinedInertia::new(3, 0, 0, 0),
    RefinedInertia::new(0, 3, 0, 0),
    RefinedInertia::new(2, 1, 0, 0),
    RefinedInertia::new(1, 2, 0, 0),
];

fn check_total(nu: &RefinedInertia) -> Result<()> {
    if nu.total() == 8 {
        Ok(())
    } else {
        Err(Error::InertiaTotal(nu.total()))
    }
}

fn int<S: Scalar>(v: i64) -> S {
    S::from_i64(v)
}

/// `t^{n₀} (t²+1)^{nᵢ} (t-1)^{n₊} (t+1)^{n₋}`
fn model_polynomial<S: Scalar>(r: &RefinedInertia) -> Polynomial<S> {
    let t = Polynomial::<S>::monomial(1);
    let imag = Polynomial::quadratic(S::zero(), S::one());
    let pos = Polynomial::linear(S::one());
    let neg = Polynomial::linear(-S::one());
    Polynomial::product(
        [
            t.pow(r.n_zero),
            imag.pow(r.n_imag),
            pos.pow(r.n_plus),
            neg.pow(r.n_minus),
        ]
        .iter(),
    )
}

/// `(t-N)³`, `(t+N)³`, `(t+3N)(t-N)²` or `(t-3N)(t+N)²` for the matching
/// entry of `CUBIC_SHARES`.
fn cubic<S: Scalar>(share: &RefinedInertia, n: &S) -> Polynomial<S> {
    let lin = |root: S| Polynomial::linear(root);
    let three_n = int::<S>(3) * n.clone();
    match (share.n_plus, share.n_minus) {
        (3, 0) => lin(n.clone()).pow(3),
        (0, 3) => lin(-n.clone()).pow(3),
        (2, 1) => &lin(-three_n) * &lin(n.clone()).pow(2),
        (1, 2) => &lin(three_n) * &lin(-n.clone()).pow(2),
        _ => unreachable!("not a cubic share"),
    }
}

/// A degree-2 monic polynomial with refined inertia `r` (total 2).
pub fn d_target_for_inertia<S: Scalar>(r: &RefinedInertia) -> Result<Polynomial<S>> {
    if r.total() != 2 {
        return Err(Error::Precondition(format!(
            "D-block inertia must have total 2, got {r}"
        )));
    }
    if r.n_imag == 1 {
        return Ok(Polynomial::quadratic(S::zero(), int(D_IMAGINARY_SQUARE)));
    }
    Ok(model_polynomial(r))
}

/// A matrix with sign pattern T and refined inertia `μ <= ν`, where `ν` has
/// total 8 and `μ` has total 6.
///
/// When `n₀ + 2nᵢ >= 6` the spectrum is zeros and imaginary pairs, built from
/// `(t²+b)(t²+c)(t²+d)`. Otherwise a remainder of total 2 is set aside for a
/// D-block, and the T-block target is `cubic(N) · h` with `h` a model cubic;
/// `N` doubles from 1 until `a3 / a5 > 0`.
pub fn realize_inertia_t<S: Scalar>(nu: &RefinedInertia) -> Result<(RefinedInertia, Matrix<S>)> {
    check_total(nu)?;
    if nu.n_zero + 2 * nu.n_imag >= 6 {
        let m_imag = nu.n_imag.min(3);
        let mu = RefinedInertia::new(0, 0, 6 - 2 * m_imag, m_imag);
        let vals: Vec<S> = (1..=3)
            .map(|k| {
                if k <= m_imag as i64 {
                    int(k)
                } else {
                    S::zero()
                }
            })
            .collect();
        let (_, m) = realize_obs2(&vals[0], &vals[1], &vals[2])?;
        return Ok((mu, m));
    }

    let mu = D_SHARES
        .iter()
        .filter_map(|r| nu.checked_sub(r))
        .find(|mu| mu.n_plus + mu.n_minus >= 3)
        .ok_or_else(|| Error::Construction(format!("no T-block share for {nu}")))?;
    let (share, rest) = CUBIC_SHARES
        .iter()
        .find_map(|c| mu.checked_sub(c).map(|rest| (c, rest)))
        .expect("m+ + m- >= 3 admits a cubic share");
    let h = model_polynomial::<S>(&rest);
    let mut n = S::one();
    for _ in 0..DOUBLING_CAP {
        let target = &cubic(share, &n) * &h;
        if t_gate(&target) == GateStatus::SameSign {
            let (_, m) = realize_obs3(&target)?;
            return Ok((mu, m));
        }
        n = n.clone() + n;
    }
    Err(Error::Construction(format!(
        "gate a3/a5 > 0 not reached for {mu} after {DOUBLING_CAP} doublings"
    )))
}

/// A realization of a refined inertia over diag(T, D).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "S: Scalar")]
pub struct InertiaRealization<S> {
    pub target: RefinedInertia,
    pub t_inertia: RefinedInertia,
    pub d_inertia: RefinedInertia,
    pub d_target: Polynomial<S>,
    pub matrix: Matrix<S>,
}

/// An 8×8 matrix with pattern diag(T, D) and refined inertia `ν`.
pub fn realize_inertia_td<S: Scalar>(nu: &RefinedInertia) -> Result<InertiaRealization<S>> {
    check_total(nu)?;
    let (mu, t_block) = realize_inertia_t::<S>(nu)?;
    let rest = nu
        .checked_sub(&mu)
        .ok_or_else(|| Error::Construction(format!("{mu} is not below {nu}")))?;
    let d_target = d_target_for_inertia::<S>(&rest)?;
    let d_block = realize_quadratic_d(&d_target.coeff(1), &d_target.coeff(0));
    let matrix = Matrix::block_diag(&[t_block, d_block])?;
    Ok(InertiaRealization {
        target: *nu,
        t_inertia: mu,
        d_inertia: rest,
        d_target,
        matrix,
    })
}
