//! Independent reference computations for the integration tests. Nothing
//! here calls the library's polynomial or matrix algorithms.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

pub fn qf(x: f64) -> Q {
    Q::from_float(x).expect("finite")
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    d
}

/// det(tI - m) as ascending coefficients, by exact interpolation through
/// t = 0, 1, …, n-1 of det(tI - m) - t^n.
pub fn char_poly_interp(m: &[Vec<Q>]) -> Vec<Q> {
    let n = m.len();
    let xs: Vec<Q> = (0..n).map(|j| q(j as i64, 1)).collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|x| {
            let shifted: Vec<Vec<Q>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let diag = if i == j { x.clone() } else { Q::zero() };
                            diag - &m[i][j]
                        })
                        .collect()
                })
                .collect();
            det(shifted) - pow(x, n)
        })
        .collect();
    let mut c = interpolate(&xs, &ys);
    c.resize(n, Q::zero());
    c.push(Q::one());
    c
}

fn pow(x: &Q, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * x)
}

/// Coefficients of the unique polynomial of degree < len through the points
/// (Newton divided differences, expanded).
pub fn interpolate(xs: &[Q], ys: &[Q]) -> Vec<Q> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut out = vec![Q::zero(); n.max(1)];
    for i in (0..n).rev() {
        // out = out * (t - xs[i]) + dd[i]
        let mut next = vec![Q::zero(); n.max(1)];
        for (k, c) in out.iter().enumerate() {
            if k + 1 < next.len() {
                next[k + 1] += c;
            }
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        out = next;
    }
    out
}

pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn mul_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn mul_f64(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Splits a square matrix into its finest contiguous diagonal blocks and
/// multiplies their interpolated characteristic polynomials.
pub fn char_poly_blockwise(m: &[Vec<Q>]) -> Vec<Q> {
    let n = m.len();
    let mut out = vec![Q::one()];
    let mut start = 0;
    while start < n {
        let mut end = start;
        let mut i = start;
        while i <= end {
            for j in 0..n {
                if !m[i][j].is_zero() || !m[j][i].is_zero() {
                    assert!(j >= start, "entries left of the current block");
                    end = end.max(j);
                }
            }
            i += 1;
        }
        let block: Vec<Vec<Q>> = (start..=end).map(|r| m[r][start..=end].to_vec()).collect();
        out = mul(&out, &char_poly_interp(&block));
        start = end + 1;
    }
    out
}

/// max |a - b| / max(1, max |b|), computed exactly.
pub fn relative_error(a: &[Q], b: &[Q]) -> f64 {
    assert_eq!(a.len(), b.len(), "degree mismatch");
    let mut diff = Q::zero();
    let mut scale = Q::one();
    for (x, y) in a.iter().zip(b) {
        diff = diff.max((x - y).abs());
        scale = scale.max(y.abs());
    }
    (diff / scale).to_f64().unwrap()
}
