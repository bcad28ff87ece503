//! The coefficient equation systems behind the trichotomy, as checkable
//! objects.
//!
//! Each system relates four groups of complex numbers a, b, c, d and a
//! phase η ≠ 1 through one "all-ones" equation carrying η and a family of
//! phase-free product equations. Whenever the hypothesis equations hold
//! and the a/b entries at the all-ones index are nonzero, either the
//! c-side low entries all vanish or the d-side low entries do, and in
//! consequence the mixed products of low entries vanish too. The three
//! arities differ only in how many indices survive: 2×2 blocks for all
//! four groups, b and c collapsed to pairs, or everything collapsed to
//! pairs.
//!
//! [`sample_system`] produces non-vacuous solutions by drawing free
//! parameters from the unit circle and solving for the dependent entries,
//! one family per conclusion branch, so checkers can be exercised on
//! systems where the equations hold with plenty of margin.

use num_complex::Complex64;
use thiserror::Error;

use crate::rng::SeededRng;
use crate::tolerance::{LEMMA_NONZERO_FACTOR, PHASE_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LemmaError {
    #[error("expected a {expected:?} system, got {got:?}")]
    WrongArity {
        expected: LemmaArity,
        got: LemmaArity,
    },

    #[error("phase η = {0} is within tolerance of 1")]
    TrivialPhase(Complex64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaArity {
    FourSets,
    ThreeSets,
    TwoSets,
}

impl LemmaArity {
    pub const ALL: [LemmaArity; 3] = [
        LemmaArity::FourSets,
        LemmaArity::ThreeSets,
        LemmaArity::TwoSets,
    ];
}

type C2 = [Complex64; 2];
type C2x2 = [[Complex64; 2]; 2];

/// A coefficient system at one of the three arities.
#[derive(Clone, Debug, PartialEq)]
pub enum LemmaSystem {
    FourSets {
        a: C2x2,
        b: C2x2,
        c: C2x2,
        d: C2x2,
        eta: Complex64,
    },
    ThreeSets {
        a: C2x2,
        b: C2,
        c: C2,
        d: C2x2,
        eta: Complex64,
    },
    TwoSets {
        a: C2,
        b: C2,
        c: C2,
        d: C2,
        eta: Complex64,
    },
}

impl LemmaSystem {
    pub fn arity(&self) -> LemmaArity {
        match self {
            LemmaSystem::FourSets { .. } => LemmaArity::FourSets,
            LemmaSystem::ThreeSets { .. } => LemmaArity::ThreeSets,
            LemmaSystem::TwoSets { .. } => LemmaArity::TwoSets,
        }
    }

    pub fn eta(&self) -> Complex64 {
        match self {
            LemmaSystem::FourSets { eta, .. }
            | LemmaSystem::ThreeSets { eta, .. }
            | LemmaSystem::TwoSets { eta, .. } => *eta,
        }
    }
}

/// Which side of the either/or conclusion fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConclusionBranch {
    /// The c-side low entries vanish.
    CSideZero,
    /// The d-side low entries vanish.
    DSideZero,
    /// Nothing to conclude: the hypothesis fails or the all-ones product
    /// is (numerically) zero.
    Vacuous,
    /// Hypothesis satisfied and nondegenerate, yet neither branch holds.
    /// Never observed on genuine systems; reported so a numerics bug
    /// cannot hide.
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemmaReport {
    pub hypothesis_holds: bool,
    /// Both all-ones entries of the a- and b-groups are nonzero (above
    /// ten times the tolerance).
    pub nondegenerate: bool,
    pub conclusion_branch: ConclusionBranch,
    /// Largest residual among the hypothesis equations, and, when a
    /// branch fires, the conclusion products.
    pub max_residual: f64,
}

fn nonzero(z: Complex64, tol: f64) -> bool {
    z.norm() > LEMMA_NONZERO_FACTOR * tol
}

fn all_below(values: &[Complex64], tol: f64) -> bool {
    values.iter().all(|z| z.norm() <= tol)
}

struct BranchInput<'a> {
    /// Entries that must vanish for the c-side branch.
    c_low: &'a [Complex64],
    /// Entries that must vanish for the d-side branch.
    d_low: &'a [Complex64],
    /// Products that must vanish once either branch holds.
    consequences: &'a [Complex64],
}

fn conclude(
    hypothesis_residual: f64,
    degenerate: bool,
    input: BranchInput<'_>,
    tol: f64,
) -> LemmaReport {
    let hypothesis_holds = hypothesis_residual <= tol;
    let nondegenerate = !degenerate;
    if !hypothesis_holds || degenerate {
        return LemmaReport {
            hypothesis_holds,
            nondegenerate,
            conclusion_branch: ConclusionBranch::Vacuous,
            max_residual: hypothesis_residual,
        };
    }

    let c_zero = all_below(input.c_low, tol);
    let d_zero = all_below(input.d_low, tol);
    let consequence_residual = input
        .consequences
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let branch = if (c_zero || d_zero) && consequence_residual <= tol {
        if c_zero {
            ConclusionBranch::CSideZero
        } else {
            ConclusionBranch::DSideZero
        }
    } else {
        ConclusionBranch::Violated
    };
    LemmaReport {
        hypothesis_holds,
        nondegenerate,
        conclusion_branch: branch,
        max_residual: hypothesis_residual.max(consequence_residual),
    }
}

/// Check the full 2×2 system: 16 hypothesis equations, branch on the
/// three low entries of c or d, consequence products over all r,s.
pub fn check_four_sets(sys: &LemmaSystem, tol: f64) -> Result<LemmaReport, LemmaError> {
    let LemmaSystem::FourSets { a, b, c, d, eta } = sys else {
        return Err(LemmaError::WrongArity {
            expected: LemmaArity::FourSets,
            got: sys.arity(),
        });
    };
    let mut residual = 0.0f64;
    for j in 0..2 {
        for k in 0..2 {
            for l in 0..2 {
                for m in 0..2 {
                    let phase = if j & k & l & m == 1 {
                        *eta
                    } else {
                        Complex64::ONE
                    };
                    let diff = a[j][k] * b[l][m] - phase * c[j][l] * d[k][m];
                    residual = residual.max(diff.norm());
                }
            }
        }
    }
    let degenerate = !(nonzero(a[1][1], tol) && nonzero(b[1][1], tol));
    let mut consequences = Vec::with_capacity(16);
    for r in 0..2 {
        for s in 0..2 {
            consequences.extend([
                a[r][0] * b[0][s],
                a[0][r] * b[s][0],
                c[r][0] * d[0][s],
                c[0][r] * d[s][0],
            ]);
        }
    }
    Ok(conclude(
        residual,
        degenerate,
        BranchInput {
            c_low: &[c[0][0], c[0][1], c[1][0]],
            d_low: &[d[0][0], d[0][1], d[1][0]],
            consequences: &consequences,
        },
        tol,
    ))
}

/// Check the collapsed system where b and c carry a single index:
/// 8 hypothesis equations.
pub fn check_three_sets(sys: &LemmaSystem, tol: f64) -> Result<LemmaReport, LemmaError> {
    let LemmaSystem::ThreeSets { a, b, c, d, eta } = sys else {
        return Err(LemmaError::WrongArity {
            expected: LemmaArity::ThreeSets,
            got: sys.arity(),
        });
    };
    let mut residual = 0.0f64;
    for j in 0..2 {
        for k in 0..2 {
            for m in 0..2 {
                let phase = if j & k & m == 1 { *eta } else { Complex64::ONE };
                let diff = a[j][k] * b[m] - phase * c[j] * d[k][m];
                residual = residual.max(diff.norm());
            }
        }
    }
    let degenerate = !(nonzero(a[1][1], tol) && nonzero(b[1], tol));
    let consequences = [
        a[0][0] * b[0],
        c[0] * d[0][0],
        a[0][1] * b[0],
        c[0] * d[1][0],
    ];
    Ok(conclude(
        residual,
        degenerate,
        BranchInput {
            c_low: &[c[0]],
            d_low: &[d[0][0], d[1][0]],
            consequences: &consequences,
        },
        tol,
    ))
}

/// Check the fully collapsed system: 4 hypothesis equations.
pub fn check_two_sets(sys: &LemmaSystem, tol: f64) -> Result<LemmaReport, LemmaError> {
    let LemmaSystem::TwoSets { a, b, c, d, eta } = sys else {
        return Err(LemmaError::WrongArity {
            expected: LemmaArity::TwoSets,
            got: sys.arity(),
        });
    };
    let mut residual = 0.0f64;
    for j in 0..2 {
        for m in 0..2 {
            let phase = if j & m == 1 { *eta } else { Complex64::ONE };
            let diff = a[j] * b[m] - phase * c[j] * d[m];
            residual = residual.max(diff.norm());
        }
    }
    let degenerate = !(nonzero(a[1], tol) && nonzero(b[1], tol));
    let consequences = [a[0] * b[0], c[0] * d[0]];
    Ok(conclude(
        residual,
        degenerate,
        BranchInput {
            c_low: &[c[0]],
            d_low: &[d[0]],
            consequences: &consequences,
        },
        tol,
    ))
}

/// Dispatch on the system's arity.
pub fn check(sys: &LemmaSystem, tol: f64) -> LemmaReport {
    match sys.arity() {
        LemmaArity::FourSets => check_four_sets(sys, tol).expect("arity matches"),
        LemmaArity::ThreeSets => check_three_sets(sys, tol).expect("arity matches"),
        LemmaArity::TwoSets => check_two_sets(sys, tol).expect("arity matches"),
    }
}

/// Residual of the side identities that pin the corner entries:
/// c₀₁c₁₀ = η·c₀₀c₁₁ and d₀₁d₁₀ = η·d₀₀d₁₁ where the shapes allow.
/// `None` for the fully collapsed arity, which has no such identity.
pub fn remark_residual(sys: &LemmaSystem) -> Option<f64> {
    match sys {
        LemmaSystem::FourSets { c, d, eta, .. } => {
            let rc = (c[0][1] * c[1][0] - eta * c[0][0] * c[1][1]).norm();
            let rd = (d[0][1] * d[1][0] - eta * d[0][0] * d[1][1]).norm();
            Some(rc.max(rd))
        }
        LemmaSystem::ThreeSets { d, eta, .. } => {
            Some((d[0][1] * d[1][0] - eta * d[0][0] * d[1][1]).norm())
        }
        LemmaSystem::TwoSets { .. } => None,
    }
}

/// Draw a nondegenerate hypothesis-exact system.
///
/// Free parameters live on the unit circle, dependent entries are solved
/// from the all-ones-index equations, and everything else is zero, so the
/// hypothesis holds to rounding error and no entry can fall into the
/// nonzero/zero boundary band. The seed also picks which conclusion
/// branch the system lands in.
pub fn sample_system(
    arity: LemmaArity,
    eta: Complex64,
    seed: u64,
) -> Result<LemmaSystem, LemmaError> {
    if (eta - Complex64::ONE).norm() <= PHASE_TOL {
        return Err(LemmaError::TrivialPhase(eta));
    }
    let mut rng = SeededRng::new(seed);
    let z = Complex64::ZERO;
    let p1 = rng.unit_phase();
    let p2 = rng.unit_phase();
    let p3 = rng.unit_phase();
    let p4 = rng.unit_phase();
    let d_side_zero = rng.flag();

    Ok(match (arity, d_side_zero) {
        (LemmaArity::FourSets, true) => {
            // Free: a₁₁, c₁₀, c₁₁, d₁₁; the d-side low entries all zero.
            let (a11, c10, c11, d11) = (p1, p2, p3, p4);
            LemmaSystem::FourSets {
                a: [[z, z], [z, a11]],
                b: [[z, c10 * d11 / a11], [z, eta * c11 * d11 / a11]],
                c: [[z, z], [c10, c11]],
                d: [[z, z], [z, d11]],
                eta,
            }
        }
        (LemmaArity::FourSets, false) => {
            // Mirror family: the c-side low entries all zero.
            let (a11, d10, d11, c11) = (p1, p2, p3, p4);
            LemmaSystem::FourSets {
                a: [[z, z], [z, a11]],
                b: [[z, z], [c11 * d10 / a11, eta * c11 * d11 / a11]],
                c: [[z, z], [z, c11]],
                d: [[z, z], [d10, d11]],
                eta,
            }
        }
        (LemmaArity::ThreeSets, true) => {
            // c₀ nonzero forces d₀₀ = d₁₀ = 0, with a₀₁ solved to match.
            let (a11, c0, c1, d11) = (p1, p2, p3, p4);
            LemmaSystem::ThreeSets {
                a: [[z, a11 * c0 / (eta * c1)], [z, a11]],
                b: [z, eta * c1 * d11 / a11],
                c: [c0, c1],
                d: [[z, z], [z, d11]],
                eta,
            }
        }
        (LemmaArity::ThreeSets, false) => {
            // c₀ = 0 leaves room for a nonzero d₁₀.
            let (a11, c1, d11, d10) = (p1, p2, p3, p4);
            LemmaSystem::ThreeSets {
                a: [[z, z], [z, a11]],
                b: [c1 * d10 / a11, eta * c1 * d11 / a11],
                c: [z, c1],
                d: [[z, z], [d10, d11]],
                eta,
            }
        }
        (LemmaArity::TwoSets, true) => {
            // c₀ nonzero, d₀ = 0.
            let (a1, c0, c1, d1) = (p1, p2, p3, p4);
            LemmaSystem::TwoSets {
                a: [a1 * c0 / (eta * c1), a1],
                b: [z, eta * c1 * d1 / a1],
                c: [c0, c1],
                d: [z, d1],
                eta,
            }
        }
        (LemmaArity::TwoSets, false) => {
            // c₀ = 0, d₀ free.
            let (a1, c1, d1, d0) = (p1, p2, p3, p4);
            LemmaSystem::TwoSets {
                a: [z, a1],
                b: [c1 * d0 / a1, eta * c1 * d1 / a1],
                c: [z, c1],
                d: [d0, d1],
                eta,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::LEMMA_RESIDUAL_TOL;
    use std::f64::consts::PI;

    const TOL: f64 = LEMMA_RESIDUAL_TOL;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn z() -> Complex64 {
        Complex64::ZERO
    }

    fn one() -> Complex64 {
        Complex64::ONE
    }

    #[test]
    fn four_sets_reference_system() {
        // η = i; a = (0,0,0,1), b = (0,1,0,i), c = (0,0,1,1),
        // d = (0,0,0,1) row-major. Hypothesis exact, d-side zero.
        let eta = c64(0.0, 1.0);
        let sys = LemmaSystem::FourSets {
            a: [[z(), z()], [z(), one()]],
            b: [[z(), one()], [z(), eta]],
            c: [[z(), z()], [one(), one()]],
            d: [[z(), z()], [z(), one()]],
            eta,
        };
        let report = check_four_sets(&sys, TOL).unwrap();
        assert!(report.hypothesis_holds);
        assert!(report.nondegenerate);
        assert_eq!(report.conclusion_branch, ConclusionBranch::DSideZero);
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn all_zero_system_is_vacuous() {
        let sys = LemmaSystem::FourSets {
            a: [[z(); 2]; 2],
            b: [[z(); 2]; 2],
            c: [[z(); 2]; 2],
            d: [[z(); 2]; 2],
            eta: c64(0.0, 1.0),
        };
        let report = check_four_sets(&sys, TOL).unwrap();
        assert!(report.hypothesis_holds);
        assert!(!report.nondegenerate);
        assert_eq!(report.conclusion_branch, ConclusionBranch::Vacuous);
    }

    #[test]
    fn perturbed_system_fails_hypothesis() {
        let eta = c64(0.0, 1.0);
        let sys = LemmaSystem::FourSets {
            a: [[z(), z()], [z(), one()]],
            b: [[z(), one()], [z(), eta]],
            c: [[z(), z()], [one(), one()]],
            d: [[c64(0.1, 0.0), z()], [z(), one()]],
            eta,
        };
        let report = check_four_sets(&sys, TOL).unwrap();
        assert!(!report.hypothesis_holds);
        assert_eq!(report.conclusion_branch, ConclusionBranch::Vacuous);
        assert!(report.max_residual > 0.05);
    }

    #[test]
    fn three_sets_reference_system() {
        // η = −1; a = (0,0,0,1), b = (0,−1), c = (0,1), d = (0,0,0,1):
        // hypothesis exact, c-side branch.
        let eta = c64(-1.0, 0.0);
        let sys = LemmaSystem::ThreeSets {
            a: [[z(), z()], [z(), one()]],
            b: [z(), c64(-1.0, 0.0)],
            c: [z(), one()],
            d: [[z(), z()], [z(), one()]],
            eta,
        };
        let report = check_three_sets(&sys, TOL).unwrap();
        assert!(report.hypothesis_holds);
        assert!(report.nondegenerate);
        assert_eq!(report.conclusion_branch, ConclusionBranch::CSideZero);
    }

    #[test]
    fn three_sets_rejects_coexisting_nonzeros() {
        // A nondegenerate system cannot carry both c₀ ≠ 0 and d₁₀ ≠ 0:
        // grafting a nonzero d₁₀ onto a c₀ ≠ 0 sample must break some
        // hypothesis equation.
        let eta = c64(0.0, 1.0);
        let mut grafted = None;
        for seed in 0..64 {
            let LemmaSystem::ThreeSets { a, b, c, mut d, .. } =
                sample_system(LemmaArity::ThreeSets, eta, seed).unwrap()
            else {
                unreachable!()
            };
            if c[0].norm() > 0.5 {
                d[1][0] = one();
                grafted = Some(LemmaSystem::ThreeSets { a, b, c, d, eta });
                break;
            }
        }
        let sys = grafted.expect("the c₀ ≠ 0 family occurs within a few seeds");
        let report = check_three_sets(&sys, TOL).unwrap();
        assert!(!report.hypothesis_holds);
    }

    #[test]
    fn two_sets_reference_system() {
        // η = i; a = (0,1), b = (0,i), c = (0,1), d = (0,1).
        let eta = c64(0.0, 1.0);
        let sys = LemmaSystem::TwoSets {
            a: [z(), one()],
            b: [z(), eta],
            c: [z(), one()],
            d: [z(), one()],
            eta,
        };
        let report = check_two_sets(&sys, TOL).unwrap();
        assert!(report.hypothesis_holds);
        assert!(report.nondegenerate);
        assert_eq!(report.conclusion_branch, ConclusionBranch::CSideZero);
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn degenerate_two_sets_is_vacuous() {
        // The self-map of ∣+⟩∣0⟩ gives a = c and b = d with the all-ones
        // product zero.
        let r = 1.0 / 2f64.sqrt();
        let sys = LemmaSystem::TwoSets {
            a: [c64(r, 0.0), c64(r, 0.0)],
            b: [one(), z()],
            c: [c64(r, 0.0), c64(r, 0.0)],
            d: [one(), z()],
            eta: c64(-1.0, 0.0),
        };
        let report = check_two_sets(&sys, TOL).unwrap();
        assert!(report.hypothesis_holds);
        assert!(!report.nondegenerate);
        assert_eq!(report.conclusion_branch, ConclusionBranch::Vacuous);
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let sys = LemmaSystem::TwoSets {
            a: [z(), one()],
            b: [z(), one()],
            c: [z(), one()],
            d: [z(), one()],
            eta: c64(-1.0, 0.0),
        };
        assert!(matches!(
            check_four_sets(&sys, TOL),
            Err(LemmaError::WrongArity { .. })
        ));
    }

    #[test]
    fn sampler_round_trip_all_arities_and_phases() {
        let etas = [
            c64(-1.0, 0.0),
            c64(0.0, 1.0),
            Complex64::from_polar(1.0, PI / 7.0),
        ];
        for arity in LemmaArity::ALL {
            for (ei, &eta) in etas.iter().enumerate() {
                let mut c_branch = 0u32;
                let mut d_branch = 0u32;
                for trial in 0..200u64 {
                    let seed = trial * 31 + ei as u64;
                    let sys = sample_system(arity, eta, seed).unwrap();
                    let report = check(&sys, TOL);
                    assert!(report.hypothesis_holds, "{arity:?} seed {seed}");
                    assert!(report.max_residual <= 1e-12);
                    assert!(report.nondegenerate);
                    match report.conclusion_branch {
                        ConclusionBranch::CSideZero => c_branch += 1,
                        ConclusionBranch::DSideZero => d_branch += 1,
                        other => panic!("unexpected branch {other:?}"),
                    }
                    if let Some(r) = remark_residual(&sys) {
                        assert!(r <= TOL, "remark residual {r}");
                    }
                }
                assert!(c_branch > 0 && d_branch > 0, "both families sampled");
            }
        }
    }

    #[test]
    fn sampler_rejects_trivial_phase() {
        assert!(matches!(
            sample_system(LemmaArity::TwoSets, one(), 1),
            Err(LemmaError::TrivialPhase(_))
        ));
    }
}
