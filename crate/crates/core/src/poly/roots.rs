//! Aberth–Ehrlich simultaneous root finding in `f64`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::squarefree::squarefree_decomposition;
use super::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const ITERATION_CAP: usize = 500;

/// Iteration stops once every correction is below this fraction of the
/// initial radius.
const STEP_TOLERANCE: f64 = 1e-13;

/// Angular offset of the initial circle, so no guess sits on the real axis.
const INITIAL_ANGLE: f64 = 0.4;

/// All complex roots of a real polynomial, with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootMultiset {
    roots: Vec<Complex64>,
    tol: f64,
}

impl RootMultiset {
    pub fn new(roots: Vec<Complex64>, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Precondition("tolerance must be positive".into()));
        }
        Ok(RootMultiset { roots, tol })
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

struct Eval {
    value: Complex64,
    deriv: Complex64,
    /// Running bound on the rounding error of `value`.
    noise: f64,
}

fn horner(c: &[f64], z: Complex64) -> Eval {
    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    let mut noise = 0.0;
    let r = z.norm();
    for &ci in c.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + ci;
        noise = noise * r + ci.abs();
    }
    Eval {
        value,
        deriv,
        noise: noise * f64::EPSILON * 4.0 * c.len() as f64,
    }
}

/// Scaled residual `|p(z)| / (max|c_i| · max(1,|z|)^n)`.
fn scaled_residual(c: &[f64], z: Complex64) -> f64 {
    let scale = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let n = (c.len() - 1) as i32;
    horner(c, z).value.norm() / (scale * z.norm().max(1.0).powi(n))
}

/// Runs the iteration on a polynomial with nonzero constant term. Returns the
/// roots and the number of sweeps used.
fn aberth(c: &[f64]) -> (Vec<Complex64>, usize) {
    let n = c.len() - 1;
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + INITIAL_ANGLE))
        .collect();
    let mut frozen = vec![false; n];
    let mut sweeps = 0;
    while sweeps < ITERATION_CAP {
        sweeps += 1;
        let mut max_step = 0.0f64;
        for k in 0..n {
            if frozen[k] {
                continue;
            }
            let e = horner(c, z[k]);
            if e.value.norm() <= e.noise {
                frozen[k] = true;
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = if e.deriv.norm() == 0.0 {
                -repulsion.inv()
            } else {
                let newton = e.value / e.deriv;
                newton / (Complex64::new(1.0, 0.0) - newton * repulsion)
            };
            if step.re.is_finite() && step.im.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if frozen.iter().all(|&f| f) || max_step <= STEP_TOLERANCE * radius {
            break;
        }
    }
    (z, sweeps)
}

/// Snaps near-real roots onto the axis and averages conjugate pairs so the
/// multiset is exactly conjugate-closed.
fn symmetrize(roots: &mut [Complex64], tol: f64) {
    for z in roots.iter_mut() {
        if z.im.abs() <= tol {
            z.im = 0.0;
        }
    }
    let upper: Vec<usize> = (0..roots.len()).filter(|&k| roots[k].im > 0.0).collect();
    let mut lower: Vec<usize> = (0..roots.len()).filter(|&k| roots[k].im < 0.0).collect();
    let mut unmatched = Vec::new();
    for u in upper {
        let target = roots[u].conj();
        let best = lower
            .iter()
            .enumerate()
            .min_by(|a, b| {
                (roots[*a.1] - target)
                    .norm()
                    .total_cmp(&(roots[*b.1] - target).norm())
            })
            .map(|(pos, &l)| (pos, l));
        match best {
            Some((pos, l)) => {
                lower.swap_remove(pos);
                let avg = (roots[u] + roots[l].conj()) * 0.5;
                roots[u] = avg;
                roots[l] = avg.conj();
            }
            None => unmatched.push(u),
        }
    }
    // leftovers have no partner and can only be perturbed real roots
    for k in unmatched.into_iter().chain(lower) {
        roots[k].im = 0.0;
    }
}

/// All roots of `p` by Aberth–Ehrlich iteration from a circle of radius
/// `1 + max|c_i|`.
///
/// Exact zero roots (vanishing trailing coefficients) are split off before
/// iterating. Every returned root satisfies
/// `|p(z)| / (max|c_i| · max(1,|z|)^n) <= tol`.
pub fn find_roots<S: Scalar>(p: &Polynomial<S>, tol: f64) -> Result<RootMultiset> {
    if p.degree() == 0 {
        return Err(Error::Precondition("root finding needs degree >= 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let zeros = p.zero_root_multiplicity();
    let stripped = p.strip_zero_roots();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let mut sweeps = 0;
    if stripped.degree() > 0 {
        // Repeated factors are split off exactly so that each Aberth run
        // only sees simple roots.
        let exact = stripped
            .coeffs()
            .iter()
            .map(Scalar::to_ratio)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse("non-finite coefficient".into()))?;
        for (factor, mult) in squarefree_decomposition(&exact) {
            let c: Vec<f64> = factor.iter().map(Scalar::to_f64).collect();
            let (mut found, used) = aberth(&c);
            sweeps = sweeps.max(used);
            symmetrize(&mut found, tol);
            for z in found {
                roots.extend(std::iter::repeat_n(z, mult));
            }
        }
    }
    let full = p.to_f64_coeffs();
    let worst = roots
        .iter()
        .map(|&z| scaled_residual(&full, z))
        .fold(0.0f64, f64::max);
    if worst.is_nan() || worst > tol {
        return Err(Error::RootFinding {
            iterations: sweeps,
            residual: worst,
        });
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    RootMultiset::new(roots, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> Polynomial<f64> {
        Polynomial::new(c.to_vec()).unwrap()
    }

    fn assert_contains(roots: &RootMultiset, expected: &[Complex64], tol: f64) {
        assert_eq!(roots.len(), expected.len());
        let mut left: Vec<Complex64> = roots.roots().to_vec();
        for e in expected {
            let pos = left
                .iter()
                .position(|z| (z - e).norm() <= tol)
                .unwrap_or_else(|| panic!("{e} not found in {:?}", roots.roots()));
            left.swap_remove(pos);
        }
    }

    #[test]
    fn simple_quadratics() {
        let i = Complex64::new(0.0, 1.0);
        assert_contains(
            &find_roots(&poly(&[1.0, 0.0, 1.0]), 1e-9).unwrap(),
            &[i, -i],
            1e-12,
        );
        let one = Complex64::new(1.0, 0.0);
        let r = find_roots(&poly(&[-1.0, 0.0, 1.0]), 1e-9).unwrap();
        assert_contains(&r, &[one, -one], 1e-12);
        assert!(r.roots().iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn eight_roots_of_the_counterexample_polynomial() {
        // (t²+t+1)(t²-t+2)(t²+1)(t²-1), expanded
        let f = poly(&[-2.0, -1.0, -2.0, 0.0, 1.0, 1.0, 2.0, 0.0, 1.0]);
        let r = find_roots(&f, 1e-9).unwrap();
        let s3 = 3f64.sqrt() / 2.0;
        let s7 = 7f64.sqrt() / 2.0;
        let expected = [
            Complex64::new(-0.5, s3),
            Complex64::new(-0.5, -s3),
            Complex64::new(0.5, s7),
            Complex64::new(0.5, -s7),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ];
        assert_contains(&r, &expected, 1e-10);
    }

    #[test]
    fn exact_zero_roots_and_clusters() {
        let r = find_roots(&poly(&[0.0, 0.0, 0.0, 1.0]), 1e-9).unwrap();
        assert!(r.roots().iter().all(|z| z.norm() == 0.0));

        // (t-1)^6 converges only to ~eps^(1/6) but stays near 1
        let c = [1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0];
        let r = find_roots(&poly(&c), 1e-9).unwrap();
        assert!(r.roots().iter().all(|z| (z - 1.0).norm() < 1e-2));
    }

    #[test]
    fn output_is_conjugate_closed() {
        let c = [3.0, -1.0, 2.0, 0.5, -4.0, 1.0, 1.0];
        let r = find_roots(&poly(&c), 1e-9).unwrap();
        for z in r.roots() {
            assert!(r.roots().iter().any(|w| *w == z.conj()));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(find_roots(&poly(&[1.0]), 1e-9).is_err());
        assert!(find_roots(&poly(&[1.0, 1.0]), 0.0).is_err());
    }

    #[test]
    fn large_degree_random_polynomial() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut c: Vec<f64> = (0..64).map(|_| rng.gen_range(-5.0..5.0)).collect();
        c.push(1.0);
        let r = find_roots(&poly(&c), 1e-9).unwrap();
        assert_eq!(r.len(), 64);
    }
}
