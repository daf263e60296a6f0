//! Realization over block-diagonal compositions of T and D.
//!
//! The target is factored once: its roots are grouped into real quadratics,
//! T-blocks draw sign-homogeneous triples from that list, and the leftover
//! quadratics become D-blocks. No polynomial division is performed.

use num_rational::BigRational;
use serde::Serialize;

use super::{realize_obs2, realize_obs3, realize_quadratic_d, select_t_triple, LinearClass};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pattern::{builtin_pattern, PatternName, SignPattern};
use crate::poly::{char_poly_exact, find_roots, roots_to_quadratics, Polynomial, Quadratic};
use crate::scalar::Scalar;

/// Minimum number of D-blocks for which the construction is guaranteed.
pub const MIN_D_BLOCKS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BlockKind {
    T,
    D,
}

impl BlockKind {
    pub fn order(self) -> usize {
        match self {
            BlockKind::T => 6,
            BlockKind::D => 2,
        }
    }

    pub fn pattern(self) -> SignPattern {
        let name = match self {
            BlockKind::T => PatternName::T,
            BlockKind::D => PatternName::D,
        };
        builtin_pattern(name).expect("built-in pattern")
    }

    /// `t` T-blocks followed by `d` D-blocks.
    pub fn v_layout(t: usize, d: usize) -> Vec<BlockKind> {
        let mut v = vec![BlockKind::T; t];
        v.extend(std::iter::repeat_n(BlockKind::D, d));
        v
    }

    /// `U1 = diag(T, D)` and `U(k+1) = diag(Uk, Uk)`; `level` 4 is
    /// `diag(U3, U3)`.
    pub fn u_layout(level: u32) -> Vec<BlockKind> {
        assert!(level >= 1, "U-chain starts at level 1");
        let mut v = vec![BlockKind::T, BlockKind::D];
        for _ in 1..level {
            v = [v.clone(), v].concat();
        }
        v
    }

    pub fn layout_pattern(layout: &[BlockKind]) -> Result<SignPattern> {
        SignPattern::block_diag(&layout.iter().map(|k| k.pattern()).collect::<Vec<_>>())
    }
}

/// The polynomial assigned to one block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockTarget<S> {
    pub kind: BlockKind,
    pub quadratics: Vec<Quadratic<S>>,
    /// Linear-coefficient class of a T-block triple.
    pub class: Option<LinearClass>,
}

impl<S: Scalar> BlockTarget<S> {
    pub fn polynomial(&self) -> Polynomial<S> {
        self.quadratics
            .iter()
            .fold(Polynomial::one(), |acc, q| &acc * &q.to_polynomial())
    }

    fn realize(&self) -> Result<Matrix<S>> {
        match (self.kind, self.class) {
            (BlockKind::D, _) => {
                let q = &self.quadratics[0];
                Ok(realize_quadratic_d(&q.a, &q.b))
            }
            (BlockKind::T, Some(LinearClass::Zero)) => {
                let b = |i: usize| &self.quadratics[i].b;
                realize_obs2(b(0), b(1), b(2)).map(|(_, m)| m)
            }
            (BlockKind::T, _) => realize_obs3(&self.polynomial()).map(|(_, m)| m),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealizationPlan<S> {
    pub t: usize,
    pub d: usize,
    /// T-block targets first, then D-block targets.
    pub block_targets: Vec<BlockTarget<S>>,
    /// Total `|a|` snapped to zero while forming triples.
    pub perturbation: S,
}

impl<S: Scalar> RealizationPlan<S> {
    /// Extracts `t` triples, then assigns each remaining quadratic to a D-block.
    pub fn from_quadratics(quads: Vec<Quadratic<S>>, t: usize, eps_zero: &S) -> Result<Self> {
        if quads.len() < 3 * t {
            return Err(Error::Precondition(format!(
                "{} quadratics cannot fill {t} T-blocks",
                quads.len()
            )));
        }
        let d = quads.len() - 3 * t;
        let mut rest = quads;
        let mut block_targets = Vec::with_capacity(t + d);
        let mut perturbation = S::zero();
        for _ in 0..t {
            let sel = select_t_triple(&rest, eps_zero)?;
            perturbation = perturbation + sel.snapped;
            block_targets.push(BlockTarget {
                kind: BlockKind::T,
                quadratics: sel.triple,
                class: Some(sel.class),
            });
            rest = sel.rest;
        }
        block_targets.extend(rest.into_iter().map(|q| BlockTarget {
            kind: BlockKind::D,
            quadratics: vec![q],
            class: None,
        }));
        Ok(RealizationPlan {
            t,
            d,
            block_targets,
            perturbation,
        })
    }

    /// Realizes every block and places them in `layout` order.
    pub fn assemble(&self, layout: &[BlockKind]) -> Result<(Matrix<S>, SignPattern)> {
        let mut t_blocks = self.block_targets.iter().filter(|b| b.kind == BlockKind::T);
        let mut d_blocks = self.block_targets.iter().filter(|b| b.kind == BlockKind::D);
        let mut blocks = Vec::with_capacity(layout.len());
        for kind in layout {
            let target = match kind {
                BlockKind::T => t_blocks.next(),
                BlockKind::D => d_blocks.next(),
            }
            .ok_or_else(|| Error::Precondition("layout does not match the plan".into()))?;
            blocks.push(target.realize()?);
        }
        if t_blocks.next().is_some() || d_blocks.next().is_some() {
            return Err(Error::Precondition("layout does not match the plan".into()));
        }
        let m = Matrix::block_diag(&blocks)?;
        let pattern = BlockKind::layout_pattern(layout)?;
        Ok((m, pattern))
    }
}

/// A realized matrix with its pattern and accuracy against the target.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct RealizationReport<S: Scalar> {
    pub matrix: Matrix<S>,
    pub pattern: SignPattern,
    pub target: Polynomial<S>,
    /// Max coefficient error of the exact characteristic polynomial of
    /// `matrix` against `target`, relative to the largest target coefficient.
    pub residual: f64,
    /// Total linear-coefficient mass snapped to zero during triple selection.
    pub perturbation: f64,
}

impl<S: Scalar> RealizationReport<S> {
    /// Packages a matrix with its pattern and target, computing the residual
    /// exactly. Fails if the matrix does not conform to the pattern.
    pub fn new(matrix: Matrix<S>, pattern: SignPattern, target: &Polynomial<S>) -> Result<Self> {
        report(matrix, pattern, target, 0.0)
    }
}

fn check_layout(degree: usize, layout: &[BlockKind]) -> Result<(usize, usize)> {
    let t = layout.iter().filter(|k| **k == BlockKind::T).count();
    let d = layout.len() - t;
    if d < MIN_D_BLOCKS {
        return Err(Error::Precondition(format!(
            "d must be at least {MIN_D_BLOCKS}, got {d}"
        )));
    }
    let order = 6 * t + 2 * d;
    if degree != order {
        return Err(Error::Precondition(format!(
            "target degree {degree} must equal 6t + 2d = {order}"
        )));
    }
    Ok((t, d))
}

fn report<S: Scalar>(
    matrix: Matrix<S>,
    pattern: SignPattern,
    target: &Polynomial<S>,
    perturbation: f64,
) -> Result<RealizationReport<S>> {
    if !matrix.conforms_to(&pattern)? {
        return Err(Error::Construction(
            "assembled matrix does not conform to its pattern".into(),
        ));
    }
    let residual = char_poly_exact(&matrix)?.relative_error(&target.convert()?);
    Ok(RealizationReport {
        matrix,
        pattern,
        target: target.clone(),
        residual,
        perturbation,
    })
}

/// Realizes a target supplied directly as its quadratic factors. On the exact
/// backend with `eps_zero = 0` the residual is exactly zero.
pub fn realize_layout_from_quadratics<S: Scalar>(
    target: &Polynomial<S>,
    quads: Vec<Quadratic<S>>,
    layout: &[BlockKind],
    eps_zero: &S,
) -> Result<RealizationReport<S>> {
    let (t, _) = check_layout(target.degree(), layout)?;
    if 2 * quads.len() != target.degree() {
        return Err(Error::Precondition(format!(
            "{} quadratics do not match degree {}",
            quads.len(),
            target.degree()
        )));
    }
    let plan = RealizationPlan::from_quadratics(quads, t, eps_zero)?;
    let (m, pattern) = plan.assemble(layout)?;
    report(m, pattern, target, plan.perturbation.to_f64())
}

/// Realizes an arbitrary monic target over the block layout.
///
/// Roots are found once in `f64` and grouped into quadratics; the blocks are
/// then built from the exact rational values of those quadratics and rounded
/// once onto the output backend.
pub fn realize_layout<S: Scalar>(
    f: &Polynomial<S>,
    layout: &[BlockKind],
    tol: f64,
) -> Result<RealizationReport<S>> {
    let (t, _) = check_layout(f.degree(), layout)?;
    let roots = find_roots(f, tol)?;
    let quads: Vec<Quadratic<BigRational>> = roots_to_quadratics(&roots)?
        .iter()
        .map(|q| q.convert())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Construction("non-finite quadratic factor".into()))?;
    let scale = 1.0 + f.max_abs_coeff().to_f64();
    let eps_zero = BigRational::from_float(tol * scale)
        .ok_or_else(|| Error::Precondition("tolerance must be finite".into()))?;
    let plan = RealizationPlan::from_quadratics(quads, t, &eps_zero)?;
    let (exact, pattern) = plan.assemble(layout)?;
    report(exact.convert()?, pattern, f, plan.perturbation.to_f64())
}

/// Realizes `f` over `V = diag(T, …, T, D, …, D)` with `t` T-blocks and `d`
/// D-blocks; needs `deg f = 6t + 2d` and `d >= 5`.
pub fn realize_v<S: Scalar>(
    f: &Polynomial<S>,
    t: usize,
    d: usize,
    tol: f64,
) -> Result<RealizationReport<S>> {
    realize_layout(f, &BlockKind::v_layout(t, d), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{refined_inertia_of, RefinedInertia};
    use crate::scalar::ratio;

    type Q = BigRational;

    fn ints(c: &[i64]) -> Polynomial<f64> {
        Polynomial::new(c.iter().map(|&x| x as f64).collect()).unwrap()
    }

    fn quad(a: i64, b: i64) -> Polynomial<f64> {
        ints(&[b, a, 1])
    }

    #[test]
    fn layouts() {
        assert_eq!(BlockKind::u_layout(1), vec![BlockKind::T, BlockKind::D]);
        let u4 = BlockKind::u_layout(4);
        assert_eq!(u4.len(), 16);
        assert_eq!(u4.iter().map(|k| k.order()).sum::<usize>(), 64);
        assert_eq!(
            BlockKind::layout_pattern(&BlockKind::v_layout(1, 5)).unwrap(),
            builtin_pattern(PatternName::S).unwrap()
        );
        assert_eq!(
            BlockKind::layout_pattern(&BlockKind::u_layout(3)).unwrap(),
            builtin_pattern(PatternName::U3).unwrap()
        );
    }

    #[test]
    fn imaginary_spectrum_degree_16() {
        let f = Polynomial::product([quad(0, 1).pow(5), quad(0, 2), quad(0, 3), quad(0, 4)].iter());
        assert_eq!(f.degree(), 16);
        let rep = realize_v(&f, 1, 5, 1e-9).unwrap();
        assert!(rep.matrix.conforms_to(&rep.pattern).unwrap());
        assert!(rep.residual <= 1e-9 * 10.0 * 16.0, "{}", rep.residual);
        let inertia = refined_inertia_of(&rep.matrix, 1e-6).unwrap();
        assert_eq!(inertia, RefinedInertia::new(0, 0, 0, 8));
    }

    #[test]
    fn only_d_blocks() {
        let f = Polynomial::product(
            [quad(1, 1), quad(-2, 5), quad(0, -4), quad(3, 0), quad(0, 0)].iter(),
        );
        let rep = realize_v(&f, 0, 5, 1e-9).unwrap();
        assert_eq!(rep.matrix.order(), 10);
        assert!(rep.residual < 1e-12);
        assert_eq!(rep.matrix.diagonal_blocks().len(), 5);
    }

    #[test]
    fn exact_path_from_rational_quadratics() {
        let qs: Vec<Quadratic<Q>> = [
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
        ]
        .iter()
        .map(|&(a, b)| Quadratic::new(ratio(a, 1), ratio(b, 1)))
        .collect();
        let target = Polynomial::product(
            qs.iter()
                .map(|q| q.to_polynomial())
                .collect::<Vec<_>>()
                .iter(),
        );
        let rep =
            realize_layout_from_quadratics(&target, qs, &BlockKind::v_layout(1, 5), &ratio(0, 1))
                .unwrap();
        assert_eq!(rep.residual, 0.0);
        assert_eq!(char_poly_exact(&rep.matrix).unwrap(), target);
    }

    #[test]
    fn real_spectrum_divisor() {
        // (t-1)^3 (t+2)^3 (t²+1)^5
        let f = Polynomial::product(
            [
                ints(&[-1, 1]).pow(3),
                ints(&[2, 1]).pow(3),
                quad(0, 1).pow(5),
            ]
            .iter(),
        );
        let rep = realize_v(&f, 1, 5, 1e-9).unwrap();
        assert!(rep.matrix.conforms_to(&rep.pattern).unwrap());
        assert!(rep.residual <= 1e-9 * 10.0 * 16.0, "{}", rep.residual);
    }

    #[test]
    fn preconditions() {
        let f = Polynomial::<f64>::monomial(14);
        assert!(
            matches!(realize_v(&f, 1, 4, 1e-9), Err(Error::Precondition(m)) if m.contains("d must be at least 5"))
        );
        let g = Polynomial::<f64>::monomial(12);
        assert!(matches!(
            realize_v(&g, 1, 5, 1e-9),
            Err(Error::Precondition(_))
        ));
    }
}
