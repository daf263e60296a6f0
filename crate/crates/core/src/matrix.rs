//! Dense square matrices over a [`Scalar`] backend.

use std::ops::Mul;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::{Sign, SignPattern};
use crate::scalar::{self, Scalar};

/// An `n × n` matrix stored row-major. Floating entries are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(n: usize, entries: Vec<S>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare);
        }
        if let Some(k) = entries.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite {
                row: k / n,
                col: k % n,
            });
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Matrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m
    }

    pub fn diagonal(values: &[S]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::NotSquare);
        }
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.n + j] = v;
    }

    /// A copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, v: S) -> Result<Self> {
        if i >= self.n || j >= self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: i.max(j) + 1,
            });
        }
        let mut m = self.clone();
        m.set(i, j, v);
        Matrix::new(m.n, m.entries)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.n)
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn sign_pattern(&self) -> SignPattern {
        SignPattern::new(self.n, self.entries.iter().map(Sign::of).collect())
            .expect("matrix is square")
    }

    /// True iff every entry has exactly the sign the pattern prescribes. Zero
    /// positions require an exact zero.
    pub fn conforms_to(&self, pattern: &SignPattern) -> Result<bool> {
        if pattern.order() != self.n {
            return Err(Error::DimensionMismatch {
                expected: pattern.order(),
                found: self.n,
            });
        }
        Ok(self
            .entries
            .iter()
            .enumerate()
            .all(|(k, x)| Sign::of(x) == pattern.get(k / self.n, k % self.n)))
    }

    pub fn block_diag(blocks: &[Matrix<S>]) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyBlockList);
        }
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.n;
        }
        Ok(m)
    }

    /// The principal submatrix on rows and columns `start..start + len`.
    pub fn principal_block(&self, start: usize, len: usize) -> Self {
        let mut m = Self::zeros(len);
        for i in 0..len {
            for j in 0..len {
                m.set(i, j, self.get(start + i, start + j).clone());
            }
        }
        m
    }

    /// Finest decomposition into contiguous diagonal blocks, as
    /// `(start, len)` pairs. Every entry outside the blocks is zero.
    pub fn diagonal_blocks(&self) -> Vec<(usize, usize)> {
        // reach[i]: furthest index that row/column i touches
        let mut reach: Vec<usize> = (0..self.n).collect();
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j).is_zero() {
                    let (lo, hi) = (i.min(j), i.max(j));
                    reach[lo] = reach[lo].max(hi);
                }
            }
        }
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut end = 0;
        for (i, &r) in reach.iter().enumerate() {
            end = end.max(r);
            if i == end {
                blocks.push((start, end - start + 1));
                start = i + 1;
                end = start;
            }
        }
        blocks
    }

    /// Re-expresses the matrix on another backend through exact rationals.
    pub fn convert<T: Scalar>(&self) -> Result<Matrix<T>> {
        let entries = self
            .entries
            .iter()
            .map(|x| scalar::convert::<S, T>(x))
            .collect::<Option<Vec<T>>>()
            .ok_or(Error::NonFinite { row: 0, col: 0 })?;
        Matrix::new(self.n, entries)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<Matrix<T>> {
        Matrix::new(self.n, self.entries.iter().map(f).collect())
    }
}

impl<'a, S: Scalar> Mul for &'a Matrix<S> {
    type Output = Matrix<S>;

    fn mul(self, rhs: &'a Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, rhs.n, "order mismatch in matrix product");
        let n = self.n;
        let mut out: Matrix<S> = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }
}

/// `conforms(m, p)`.
pub fn conforms<S: Scalar>(m: &Matrix<S>, p: &SignPattern) -> Result<bool> {
    m.conforms_to(p)
}

pub fn block_diag<S: Scalar>(blocks: &[Matrix<S>]) -> Result<Matrix<S>> {
    Matrix::block_diag(blocks)
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

impl<S: Scalar> Serialize for Matrix<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        MatrixJson {
            n: self.n,
            entries: self
                .rows()
                .map(|r| r.iter().map(Scalar::to_json).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Matrix<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.entries.len() != raw.n {
            return Err(D::Error::custom(format!(
                "declared n = {} but {} rows given",
                raw.n,
                raw.entries.len()
            )));
        }
        let rows = raw
            .entries
            .iter()
            .map(|r| r.iter().map(S::from_json).collect::<Result<Vec<S>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}
