//! Every degree-6 divisor of `(t²+t+1)(t²−t+2)(t²+1)(t²−1)` fails the
//! necessary condition for a characteristic polynomial of a matrix over T.

use num_rational::BigRational;
use serde::Serialize;

use crate::poly::{divisors_degree6, Polynomial};
use crate::realize::{t_gate, GateStatus};
use crate::scalar::{serialize_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisorCheck {
    pub divisor: Polynomial<BigRational>,
    #[serde(serialize_with = "serialize_scalar")]
    pub a3: BigRational,
    #[serde(serialize_with = "serialize_scalar")]
    pub a5: BigRational,
    pub gate: GateStatus,
    pub violates: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Obs12Report {
    pub target: Polynomial<BigRational>,
    pub factors: Vec<Polynomial<BigRational>>,
    pub divisors: Vec<DivisorCheck>,
    /// True iff at least one divisor exists and all of them violate.
    pub passed: bool,
}

fn int_poly(c: &[i64]) -> Polynomial<BigRational> {
    Polynomial::new(c.iter().map(|&x| BigRational::from_i64(x)).collect())
        .expect("monic by construction")
}

/// The irreducible real factors `t²+t+1, t²−t+2, t²+1, t−1, t+1`.
pub fn obs12_factors() -> Vec<Polynomial<BigRational>> {
    vec![
        int_poly(&[1, 1, 1]),
        int_poly(&[2, -1, 1]),
        int_poly(&[1, 0, 1]),
        int_poly(&[-1, 1]),
        int_poly(&[1, 1]),
    ]
}

pub fn check_obs12() -> Obs12Report {
    let factors = obs12_factors();
    let target = Polynomial::product(&factors);
    let divisors: Vec<DivisorCheck> = divisors_degree6(&factors)
        .into_iter()
        .map(|divisor| {
            let gate = t_gate(&divisor);
            DivisorCheck {
                a3: divisor.coeff(3),
                a5: divisor.coeff(5),
                violates: gate == GateStatus::Violated,
                gate,
                divisor,
            }
        })
        .collect();
    let passed = !divisors.is_empty() && divisors.iter().all(|d| d.violates);
    Obs12Report {
        target,
        factors,
        divisors,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_divisors_all_violating() {
        let rep = check_obs12();
        assert!(rep.passed);
        assert_eq!(rep.divisors.len(), 4);
        assert_eq!(rep.target, int_poly(&[-2, -1, -2, 0, 1, 1, 2, 0, 1]));
        let first = int_poly(&[2, 1, 4, 1, 3, 0, 1]);
        let hit = rep.divisors.iter().find(|d| d.divisor == first).unwrap();
        assert_eq!(hit.a5, BigRational::from_i64(0));
        assert_eq!(hit.a3, BigRational::from_i64(1));
    }
}
