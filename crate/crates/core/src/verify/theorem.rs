//! The three-part theorem suite, composed from the realizers and the exact
//! certificates.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::identities::{check_identity_tprime, check_nilpotence_lift};
use super::obs12::{check_obs12, Obs12Report};
use super::verify_realization;
use super::{IdentityCheckReport, NilpotenceLiftReport};
use crate::error::Result;
use crate::pattern::{builtin_pattern, is_superpattern, PatternName, SignPattern};
use crate::poly::{
    find_roots, refined_inertia_of, refined_inertia_of_roots, Polynomial, RefinedInertia,
};
use crate::realize::{realize_inertia_td, realize_layout, BlockKind};

/// How strong a piece of evidence is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvidenceKind {
    /// Decided by exact computation on finitely many objects.
    Exact,
    /// Exact computation over every case of a finite family.
    Exhaustive,
    /// Exact arithmetic at randomly drawn points of a polynomial identity.
    RandomizedExact,
    /// Floating-point construction on randomly drawn targets; supports, but
    /// does not prove, a universally quantified claim.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremConfig {
    pub seed: u64,
    /// Root-finding tolerance for sampled realizations.
    pub tol: f64,
    /// Classification tolerance for the inertia sweep.
    pub inertia_tol: f64,
    pub identity_samples: usize,
    pub lift_samples: usize,
    pub degree16_samples: usize,
    pub degree64_samples: usize,
    /// Target coefficients are drawn uniformly from `[-bound, bound]`.
    pub coefficient_bound: f64,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        TheoremConfig {
            seed: 0,
            tol: crate::DEFAULT_TOL,
            inertia_tol: 1e-6,
            identity_samples: 1000,
            lift_samples: 16,
            degree16_samples: 20,
            degree64_samples: 3,
            coefficient_bound: 5.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledRealizations {
    pub evidence: EvidenceKind,
    pub pattern: String,
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    /// Residual bound `10 · tol · degree`.
    pub bound: f64,
    pub max_residual: f64,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Part1Report {
    pub superpattern_evidence: EvidenceKind,
    pub sprime_is_superpattern_of_s: bool,
    pub s_order: usize,
    /// 1-based positions where S and S′ differ.
    pub differing_entries: Vec<(usize, usize)>,
    pub s_realizations: SampledRealizations,
    pub tprime_identity_evidence: EvidenceKind,
    pub tprime_identities: IdentityCheckReport,
    pub nilpotence_lift: NilpotenceLiftReport,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InertiaSweep {
    pub evidence: EvidenceKind,
    pub tol: f64,
    pub tuples: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Part2Report {
    pub obs12_evidence: EvidenceKind,
    pub obs12: Obs12Report,
    /// Refined inertia of the rejected degree-8 target.
    pub rejected_target_inertia: Option<RefinedInertia>,
    pub rejected_target_inertia_realized: bool,
    pub inertia_sweep: InertiaSweep,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainLink {
    pub name: String,
    pub order: usize,
    /// Equals diag(previous, previous).
    pub doubles_previous: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Part3Report {
    pub chain: Vec<ChainLink>,
    pub u1_not_spectrally_arbitrary: bool,
    pub u1_evidence: EvidenceKind,
    pub u3u3_realizations: SampledRealizations,
    pub note: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub config: TheoremConfig,
    pub part1: Part1Report,
    pub part2: Part2Report,
    pub part3: Part3Report,
    pub passed: bool,
}

fn random_monic<R: Rng>(rng: &mut R, degree: usize, bound: f64) -> Polynomial<f64> {
    let mut c: Vec<f64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    c.push(1.0);
    Polynomial::new(c).expect("monic by construction")
}

fn sample_realizations(
    pattern: &str,
    layout: &[BlockKind],
    samples: usize,
    seed: u64,
    config: &TheoremConfig,
) -> SampledRealizations {
    let degree: usize = layout.iter().map(|k| k.order()).sum();
    let bound = 10.0 * config.tol * degree as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut max_residual: f64 = 0.0;
    for k in 0..samples {
        let f = random_monic(&mut rng, degree, config.coefficient_bound);
        match realize_layout(&f, layout, config.tol) {
            Ok(rep) => {
                max_residual = max_residual.max(rep.residual);
                if !verify_realization(&rep, bound) {
                    failures.push(format!("sample {k}: residual {:e}", rep.residual));
                }
            }
            Err(e) => failures.push(format!("sample {k}: {e}")),
        }
    }
    SampledRealizations {
        evidence: EvidenceKind::Sampled,
        pattern: pattern.into(),
        degree,
        samples,
        seed,
        bound,
        max_residual,
        passed: failures.is_empty(),
        failures,
    }
}

fn differing_entries(p: &SignPattern, q: &SignPattern) -> Vec<(usize, usize)> {
    let n = p.order();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| p.get(i, j) != q.get(i, j))
        .map(|(i, j)| (i + 1, j + 1))
        .collect()
}

fn part1(config: &TheoremConfig) -> Result<Part1Report> {
    let s = builtin_pattern(PatternName::S)?;
    let sp = builtin_pattern(PatternName::SPrime)?;
    let superpattern = is_superpattern(&sp, &s)?;
    let differing = differing_entries(&s, &sp);
    let s_realizations = sample_realizations(
        "S",
        &BlockKind::v_layout(1, 5),
        config.degree16_samples,
        config.seed,
        config,
    );
    let tprime_identities = check_identity_tprime(config.identity_samples, config.seed)?;
    let nilpotence_lift = check_nilpotence_lift(config.lift_samples, config.seed)?;
    let passed = superpattern
        && differing == [(3, 1)]
        && s_realizations.passed
        && tprime_identities.all_passed
        && nilpotence_lift.all_passed;
    Ok(Part1Report {
        superpattern_evidence: EvidenceKind::Exact,
        sprime_is_superpattern_of_s: superpattern,
        s_order: s.order(),
        differing_entries: differing,
        s_realizations,
        tprime_identity_evidence: EvidenceKind::RandomizedExact,
        tprime_identities,
        nilpotence_lift,
        passed,
    })
}

/// Realizes every refined inertia of total 8 over diag(T, D) and classifies
/// the result at `tol`.
pub(crate) fn inertia_sweep(tol: f64) -> Result<InertiaSweep> {
    let u1 = builtin_pattern(PatternName::U1)?;
    let all = RefinedInertia::all_with_total(8);
    let mut failures = Vec::new();
    for nu in &all {
        let outcome = realize_inertia_td::<BigRational>(nu).and_then(|r| {
            let conforms = r.matrix.conforms_to(&u1)?;
            let got = refined_inertia_of(&r.matrix, tol)?;
            Ok((conforms, got))
        });
        match outcome {
            Ok((true, got)) if got == *nu => {}
            Ok((conforms, got)) => {
                failures.push(format!("{nu}: classified as {got}, conforms = {conforms}"))
            }
            Err(e) => failures.push(format!("{nu}: {e}")),
        }
    }
    Ok(InertiaSweep {
        evidence: EvidenceKind::Exhaustive,
        tol,
        tuples: all.len(),
        passed: failures.is_empty(),
        failures,
    })
}

fn part2(config: &TheoremConfig) -> Result<Part2Report> {
    let obs12 = check_obs12();
    let rejected_target_inertia = find_roots(&obs12.target, config.tol)
        .ok()
        .map(|r| refined_inertia_of_roots(&r, config.tol));
    let rejected_target_inertia_realized = match &rejected_target_inertia {
        Some(nu) => {
            let u1 = builtin_pattern(PatternName::U1)?;
            realize_inertia_td::<BigRational>(nu)
                .and_then(|r| {
                    Ok(r.matrix.conforms_to(&u1)?
                        && refined_inertia_of(&r.matrix, config.inertia_tol)? == *nu)
                })
                .unwrap_or(false)
        }
        None => false,
    };
    let sweep = inertia_sweep(config.inertia_tol)?;
    let passed = obs12.passed && rejected_target_inertia_realized && sweep.passed;
    Ok(Part2Report {
        obs12_evidence: EvidenceKind::Exhaustive,
        obs12,
        rejected_target_inertia,
        rejected_target_inertia_realized,
        inertia_sweep: sweep,
        passed,
    })
}

fn part3(config: &TheoremConfig, u1_rejected: bool) -> Result<Part3Report> {
    let mut chain = Vec::new();
    let mut prev: Option<SignPattern> = None;
    let u4 = BlockKind::layout_pattern(&BlockKind::u_layout(4))?;
    let links = [
        ("U1".to_string(), builtin_pattern(PatternName::U1)?),
        ("U2".to_string(), builtin_pattern(PatternName::U2)?),
        ("U3".to_string(), builtin_pattern(PatternName::U3)?),
        ("diag(U3,U3)".to_string(), u4),
    ];
    for (name, p) in links {
        let doubles_previous = match &prev {
            None => p == builtin_pattern(PatternName::TD)?,
            Some(q) => SignPattern::block_diag(&[q.clone(), q.clone()])? == p,
        };
        chain.push(ChainLink {
            name,
            order: p.order(),
            doubles_previous,
        });
        prev = Some(p);
    }
    let u3u3_realizations = sample_realizations(
        "diag(U3,U3)",
        &BlockKind::u_layout(4),
        config.degree64_samples,
        config.seed.wrapping_add(1),
        config,
    );
    let passed =
        chain.iter().all(|l| l.doubles_previous) && u1_rejected && u3u3_realizations.passed;
    Ok(Part3Report {
        chain,
        u1_not_spectrally_arbitrary: u1_rejected,
        u1_evidence: EvidenceKind::Exhaustive,
        u3u3_realizations,
        note: "U1 is not spectrally arbitrary and diag(U3,U3) is sampled as spectrally \
               arbitrary, so U = U1, U2 or U3 has diag(U,U) spectrally arbitrary while U is \
               not; which of the three is left undecided"
            .into(),
        passed,
    })
}

/// Runs all three parts. The report passes only when every sub-check does.
pub fn run_theorem_suite(config: &TheoremConfig) -> Result<TheoremReport> {
    let part1 = part1(config)?;
    let part2 = part2(config)?;
    let part3 = part3(config, part2.obs12.passed)?;
    let passed = part1.passed && part2.passed && part3.passed;
    Ok(TheoremReport {
        config: config.clone(),
        part1,
        part2,
        part3,
        passed,
    })
}
