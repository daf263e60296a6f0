//! Exact certificates for the negative results and the composed theorem
//! suite.

mod identities;
mod obs12;
mod theorem;

pub use identities::{
    check_identity_t, check_identity_tprime, check_nilpotence_lift, closed_form_a3_a5,
    identity_holds, random_magnitude, sample_conforming, IdentityCheckReport, NilpotenceLiftReport,
    SAMPLE_BOUND,
};
pub use obs12::{check_obs12, obs12_factors, DivisorCheck, Obs12Report};
pub use theorem::{
    run_theorem_suite, EvidenceKind, InertiaSweep, Part1Report, Part2Report, Part3Report,
    SampledRealizations, TheoremConfig, TheoremReport,
};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::pattern::Sign;
use crate::poly::char_poly_exact;
use crate::realize::RealizationReport;
use crate::scalar::Scalar;

/// Recomputes conformance and the characteristic-polynomial residual of a
/// report from its matrix and target alone; true iff the matrix conforms and
/// the residual is at most `tol`.
pub fn verify_realization<S: Scalar>(rep: &RealizationReport<S>, tol: f64) -> bool {
    let m = &rep.matrix;
    let n = m.order();
    if rep.pattern.order() != n || rep.target.degree() != n {
        return false;
    }
    let conforms = (0..n).all(|i| (0..n).all(|j| Sign::of(m.get(i, j)) == rep.pattern.get(i, j)));
    if !conforms {
        return false;
    }
    let Ok(actual) = char_poly_exact(m) else {
        return false;
    };
    let Some(target) = rep
        .target
        .coeffs()
        .iter()
        .map(Scalar::to_ratio)
        .collect::<Option<Vec<BigRational>>>()
    else {
        return false;
    };
    let mut diff = BigRational::zero();
    let mut scale = BigRational::from_i64(1);
    for (a, b) in actual.coeffs().iter().zip(&target) {
        let d = (a - b).abs();
        if d > diff {
            diff = d;
        }
        if b.abs() > scale {
            scale = b.abs();
        }
    }
    ToPrimitive::to_f64(&(diff / scale)).is_some_and(|r| r <= tol)
}
