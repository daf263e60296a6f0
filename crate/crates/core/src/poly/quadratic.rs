use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{Polynomial, RootMultiset};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The monic quadratic `t² + a t + b`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadratic<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> Quadratic<S> {
    pub fn new(a: S, b: S) -> Self {
        Quadratic { a, b }
    }

    pub fn to_polynomial(&self) -> Polynomial<S> {
        Polynomial::quadratic(self.a.clone(), self.b.clone())
    }

    pub fn convert<T: Scalar>(&self) -> Option<Quadratic<T>> {
        Some(Quadratic {
            a: crate::scalar::convert(&self.a)?,
            b: crate::scalar::convert(&self.b)?,
        })
    }
}

impl<S: Scalar> Serialize for Quadratic<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = serializer.serialize_struct("Quadratic", 2)?;
        st.serialize_field("a", &self.a.to_json())?;
        st.serialize_field("b", &self.b.to_json())?;
        st.end()
    }
}

fn from_pair(x: f64, y: f64) -> Quadratic<f64> {
    Quadratic::new(-(x + y), x * y)
}

fn from_conjugate(z: Complex64) -> Quadratic<f64> {
    Quadratic::new(-2.0 * z.re, z.norm_sqr())
}

/// Groups a conjugate-closed root multiset into real monic quadratics.
///
/// Conjugate pairs become `t² - 2Re(z) t + |z|²`. Real roots are paired
/// within their sign class, largest magnitudes first; exact zeros absorb
/// leftovers of either sign. At most one output quadratic (a leftover
/// positive with a leftover negative root) has `b < 0`.
pub fn roots_to_quadratics(r: &RootMultiset) -> Result<Vec<Quadratic<f64>>> {
    let tol = r.tol();
    if r.len() % 2 == 1 {
        return Err(Error::OddDegree(r.len()));
    }
    let mut out = Vec::with_capacity(r.len() / 2);
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let (mut pos, mut neg, mut zeros) = (Vec::new(), Vec::new(), 0usize);
    for &z in r.roots() {
        if z.im.abs() > tol {
            if z.im > 0.0 {
                upper.push(z);
            } else {
                lower.push(z);
            }
        } else if z.re > 0.0 {
            pos.push(z.re);
        } else if z.re < 0.0 {
            neg.push(z.re);
        } else {
            zeros += 1;
        }
    }

    for u in upper {
        let slack = tol * u.norm().max(1.0);
        let pos_in_lower = lower
            .iter()
            .position(|l| (l.conj() - u).norm() <= slack)
            .ok_or_else(|| Error::ConjugateClosure(u.to_string()))?;
        lower.swap_remove(pos_in_lower);
        out.push(from_conjugate(u));
    }
    if let Some(l) = lower.first() {
        return Err(Error::ConjugateClosure(l.to_string()));
    }

    pos.sort_by(|a, b| b.total_cmp(a));
    neg.sort_by(|a, b| a.total_cmp(b));
    let mut pair_up = |v: &[f64]| -> Option<f64> {
        for c in v.chunks(2) {
            match c {
                [x, y] => out.push(from_pair(*x, *y)),
                [x] => return Some(*x),
                _ => unreachable!(),
            }
        }
        None
    };
    let mut left_pos = pair_up(&pos);
    let mut left_neg = pair_up(&neg);
    for leftover in [&mut left_pos, &mut left_neg] {
        if zeros > 0 {
            if let Some(x) = leftover.take() {
                out.push(from_pair(x, 0.0));
                zeros -= 1;
            }
        }
    }
    out.extend((0..zeros / 2).map(|_| from_pair(0.0, 0.0)));
    match (left_pos, left_neg) {
        (Some(x), Some(y)) => out.push(from_pair(x, y)),
        (None, None) => {}
        // unreachable for even multiplicity
        _ => return Err(Error::OddDegree(r.len())),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real_multiset(xs: &[f64]) -> RootMultiset {
        RootMultiset::new(xs.iter().map(|&x| Complex64::new(x, 0.0)).collect(), 1e-9).unwrap()
    }

    fn as_pairs(q: &[Quadratic<f64>]) -> Vec<(f64, f64)> {
        q.iter().map(|q| (q.a, q.b)).collect()
    }

    /// Every perfect matching of `xs`, as lists of index pairs.
    fn matchings(idx: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
        if idx.is_empty() {
            return vec![vec![]];
        }
        let first = idx[0];
        let mut all = Vec::new();
        for k in 1..idx.len() {
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != 0 && p != k)
                .map(|(_, &v)| v)
                .collect();
            for mut m in matchings(rest) {
                m.push((first, idx[k]));
                all.push(m);
            }
        }
        all
    }

    fn best_nonneg_count(xs: &[f64]) -> usize {
        matchings((0..xs.len()).collect())
            .iter()
            .map(|m| m.iter().filter(|(i, j)| xs[*i] * xs[*j] >= 0.0).count())
            .max()
            .unwrap()
    }

    #[test]
    fn conjugate_and_real_pairs() {
        let i = Complex64::new(0.0, 1.0);
        let r = RootMultiset::new(
            vec![i, -i, Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
            1e-9,
        )
        .unwrap();
        assert_eq!(
            as_pairs(&roots_to_quadratics(&r).unwrap()),
            vec![(0.0, 1.0), (0.0, -1.0)]
        );
    }

    #[test]
    fn sign_homogeneous_pairing_matches_enumeration() {
        let xs = [1.0, 2.0, -3.0, -4.0];
        let q = roots_to_quadratics(&real_multiset(&xs)).unwrap();
        assert_eq!(as_pairs(&q), vec![(-3.0, 2.0), (7.0, 12.0)]);
        assert_eq!(best_nonneg_count(&xs), 2);

        let xs = [1.0, -1.0, 2.0, 3.0];
        let q = roots_to_quadratics(&real_multiset(&xs)).unwrap();
        assert_eq!(as_pairs(&q), vec![(-5.0, 6.0), (0.0, -1.0)]);
        assert_eq!(best_nonneg_count(&xs), 1);
    }

    #[test]
    fn rule_is_optimal_on_small_sign_mixes() {
        let pool = [3.0, -2.0, 0.0, 1.5, -0.5, 0.0, 4.0, -1.0];
        for mask in 0u32..256 {
            let xs: Vec<f64> = (0..8)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| pool[k])
                .collect();
            if xs.len() % 2 == 1 || xs.is_empty() {
                continue;
            }
            let q = roots_to_quadratics(&real_multiset(&xs)).unwrap();
            let nonneg = q.iter().filter(|q| q.b >= 0.0).count();
            assert_eq!(nonneg, best_nonneg_count(&xs), "{xs:?}");
            assert!(q.len() - nonneg <= 1);
        }
    }

    #[test]
    fn rejects_odd_and_unpaired() {
        assert!(matches!(
            roots_to_quadratics(&real_multiset(&[1.0, 2.0, 3.0])),
            Err(Error::OddDegree(3))
        ));
        let r = RootMultiset::new(
            vec![Complex64::new(1.0, 1.0), Complex64::new(2.0, -1.0)],
            1e-9,
        )
        .unwrap();
        assert!(matches!(
            roots_to_quadratics(&r),
            Err(Error::ConjugateClosure(_))
        ));
    }
}
