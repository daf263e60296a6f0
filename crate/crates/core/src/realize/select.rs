use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Quadratic;
use crate::scalar::Scalar;

/// Sign class of a quadratic's linear coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearClass {
    Positive,
    Negative,
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TripleSelection<S> {
    /// Three quadratics of one class; in the zero class their `a` is exactly 0.
    pub triple: Vec<Quadratic<S>>,
    pub rest: Vec<Quadratic<S>>,
    pub class: LinearClass,
    /// Sum of `|a|` removed by snapping near-zero linear coefficients.
    pub snapped: S,
}

fn classify<S: Scalar>(a: &S, eps_zero: &S) -> LinearClass {
    if a.abs() <= *eps_zero {
        LinearClass::Zero
    } else if a.is_positive() {
        LinearClass::Positive
    } else {
        LinearClass::Negative
    }
}

/// Picks three quadratics with `b >= 0` whose linear coefficients share a
/// sign class.
///
/// Needs at least seven quadratics with `b >= 0` and at most one with
/// `b < 0`, which guarantees a class of size three. A zero-class triple is
/// preferred (it realizes through the even-polynomial construction); between
/// the positive and negative classes the one whose third-largest `|a|` is
/// biggest wins, taking its three largest members.
pub fn select_t_triple<S: Scalar>(
    quads: &[Quadratic<S>],
    eps_zero: &S,
) -> Result<TripleSelection<S>> {
    let negative_b = quads.iter().filter(|q| q.b.is_negative()).count();
    if negative_b > 1 {
        return Err(Error::Precondition(format!(
            "at most one quadratic may have b < 0, found {negative_b}"
        )));
    }
    if quads.len() - negative_b < 7 {
        return Err(Error::Precondition(format!(
            "need at least seven quadratics with b >= 0, found {}",
            quads.len() - negative_b
        )));
    }
    let members = |class: LinearClass| -> Vec<usize> {
        (0..quads.len())
            .filter(|&k| !quads[k].b.is_negative() && classify(&quads[k].a, eps_zero) == class)
            .collect()
    };
    let zero = members(LinearClass::Zero);
    let (class, picked) = if zero.len() >= 3 {
        (LinearClass::Zero, zero[..3].to_vec())
    } else {
        let mut best: Option<(LinearClass, Vec<usize>)> = None;
        for class in [LinearClass::Positive, LinearClass::Negative] {
            let mut idx = members(class);
            if idx.len() < 3 {
                continue;
            }
            idx.sort_by(|&i, &j| {
                quads[j]
                    .a
                    .abs()
                    .partial_cmp(&quads[i].a.abs())
                    .expect("finite coefficients")
            });
            idx.truncate(3);
            let better = match &best {
                None => true,
                Some((_, cur)) => quads[idx[2]].a.abs() > quads[cur[2]].a.abs(),
            };
            if better {
                best = Some((class, idx));
            }
        }
        best.ok_or_else(|| Error::Precondition("no sign class of size three".into()))?
    };

    let mut snapped = S::zero();
    let triple = picked
        .iter()
        .map(|&k| {
            let q = &quads[k];
            if class == LinearClass::Zero {
                snapped = snapped.clone() + q.a.abs();
                Quadratic::new(S::zero(), q.b.clone())
            } else {
                q.clone()
            }
        })
        .collect();
    let rest = (0..quads.len())
        .filter(|k| !picked.contains(k))
        .map(|k| quads[k].clone())
        .collect();
    Ok(TripleSelection {
        triple,
        rest,
        class,
        snapped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::realize::{t_gate, GateStatus};
    use crate::scalar::ratio;
    use num_rational::BigRational;

    fn quads(v: &[(i64, i64)]) -> Vec<Quadratic<BigRational>> {
        v.iter()
            .map(|&(a, b)| Quadratic::new(ratio(a, 1), ratio(b, 1)))
            .collect()
    }

    /// Class sizes counted directly, for the pigeonhole oracle.
    fn class_sizes(v: &[(i64, i64)]) -> (usize, usize, usize) {
        let nonneg = v.iter().filter(|(_, b)| *b >= 0);
        let (mut p, mut n, mut z) = (0, 0, 0);
        for (a, _) in nonneg {
            match a.signum() {
                1 => p += 1,
                -1 => n += 1,
                _ => z += 1,
            }
        }
        (p, n, z)
    }

    #[test]
    fn prefers_the_zero_class() {
        let v = [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 1),
            (-1, 1),
            (2, 1),
            (0, -1),
            (0, 5),
        ];
        let sel = select_t_triple(&quads(&v), &ratio(0, 1)).unwrap();
        assert_eq!(sel.class, LinearClass::Zero);
        assert_eq!(sel.triple, quads(&[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(sel.rest.len(), 5);
    }

    #[test]
    fn positive_class_by_counting() {
        let a = [1, 2, -1, -2, 3, -3, 0, 4];
        let v: Vec<(i64, i64)> = a.iter().map(|&a| (a, 1)).collect();
        assert_eq!(class_sizes(&v), (4, 3, 1));
        let sel = select_t_triple(&quads(&v), &ratio(0, 1)).unwrap();
        assert_eq!(sel.class, LinearClass::Positive);
        assert!(sel
            .triple
            .iter()
            .all(|q| num_traits::Signed::is_positive(&q.a)));
        let product = Polynomial::product(
            sel.triple
                .iter()
                .map(|q| q.to_polynomial())
                .collect::<Vec<_>>()
                .iter(),
        );
        assert_eq!(t_gate(&product), GateStatus::SameSign);
    }

    #[test]
    fn pigeonhole_size_three_class() {
        let v = [(1, 1), (2, 0), (-1, 3), (-5, 2), (0, 1), (0, 4), (0, 9)];
        assert_eq!(class_sizes(&v), (2, 2, 3));
        let sel = select_t_triple(&quads(&v), &ratio(0, 1)).unwrap();
        assert_eq!(sel.class, LinearClass::Zero);

        let v = [(1, 1), (2, 0), (-1, 3), (-5, 2), (-2, 1), (0, 4), (0, 9)];
        assert_eq!(class_sizes(&v), (2, 3, 2));
        let sel = select_t_triple(&quads(&v), &ratio(0, 1)).unwrap();
        assert_eq!(sel.class, LinearClass::Negative);
    }

    #[test]
    fn snaps_near_zero_linear_terms() {
        let v = vec![
            Quadratic::new(1e-12, 1.0),
            Quadratic::new(-2e-12, 2.0),
            Quadratic::new(0.0, 3.0),
            Quadratic::new(1.0, 1.0),
            Quadratic::new(-1.0, 1.0),
            Quadratic::new(1.0, 2.0),
            Quadratic::new(-1.0, 2.0),
            Quadratic::new(0.5, -1.0),
        ];
        let sel = select_t_triple(&v, &1e-9f64).unwrap();
        let snapped: f64 = sel.snapped;
        assert_eq!(sel.class, LinearClass::Zero);
        assert!(sel.triple.iter().all(|q| q.a == 0.0));
        assert!((snapped - 3e-12).abs() < 1e-20);
    }

    #[test]
    fn contract_violations() {
        let two_negative = [
            (0, -1),
            (0, -2),
            (1, 1),
            (1, 1),
            (1, 1),
            (1, 1),
            (1, 1),
            (1, 1),
        ];
        assert!(select_t_triple(&quads(&two_negative), &ratio(0, 1)).is_err());
        let too_few = [(1, 1), (1, 1), (-1, 1), (-1, 1), (0, 1), (0, 1)];
        assert!(select_t_triple(&quads(&too_few), &ratio(0, 1)).is_err());
    }
}
