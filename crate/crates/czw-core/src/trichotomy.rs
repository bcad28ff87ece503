//! The three-branch verdict for a phase gate acting on a pure state, and
//! the machinery used to audit it.
//!
//! For any target set S of size at least two and phase η ≠ 1, at least
//! one of the following holds: the input is S-entangled, the output is
//! S-entangled, or the gate simplifies on the input.
//! [`verify_trichotomy`] evaluates all three branches independently and
//! reports which fired; if none did, it emits a full forensic dump,
//! because that signals a numerics bug rather than a disproof.
//!
//! The remaining items execute the analysis that backs the trichotomy on
//! hypothetically both-separable pairs: classification of the four
//! quadrant intersections S∩A∩C .. S∩B∩D into the three coefficient
//! cases, extraction of the coefficient systems from separation
//! certificates, the per-case product equations, and the construction of
//! a test-string witness with nonvanishing amplitude.

use num_complex::Complex64;
use thiserror::Error;

use crate::gate::{GateError, PhaseGate};
use crate::lemmas::{LemmaArity, LemmaSystem};
use crate::separability::{separation_scan, SepError, SeparationCertificate, SplitDiagnostic};
use crate::simplification::{
    detect_simplification, SimplificationKind, SimplificationVerdict, SimplifyError,
};
use crate::state::{PureState, StateError};
use crate::strings::{PartialString, QubitSet, Region, StringError, StringFamily};

#[derive(Debug, Error)]
pub enum TrichotomyError {
    #[error("target set {0} has fewer than two members")]
    TargetsTooSmall(QubitSet),

    #[error("{a} and {b} do not bipartition {whole}")]
    NotABipartition {
        a: QubitSet,
        b: QubitSet,
        whole: QubitSet,
    },

    #[error("bipartition ({a}|{b}) does not split the target set {s}")]
    DoesNotSplit {
        a: QubitSet,
        b: QubitSet,
        s: QubitSet,
    },

    #[error("empty quadrants {0:?} cannot occur when both bipartitions split the targets")]
    ImpossibleQuadPattern(Vec<Quad>),

    #[error("{0} is not a test string for the given quadrants")]
    NotTestString(PartialString),

    #[error("overlay string {0} is not all-ones on the target set")]
    BadOverlayString(PartialString),

    #[error("inconsistent inputs: {0}")]
    MismatchedInputs(String),

    #[error("the gate fixes the state outright; no witness construction applies")]
    SimplifiesOutright,

    #[error("witness construction hit a contradiction at {stage}: {detail}")]
    InternalContradiction { stage: &'static str, detail: String },

    #[error(transparent)]
    Gate(#[from] GateError),

    #[error(transparent)]
    State(#[from] StateError),

    #[error(transparent)]
    Separability(#[from] SepError),

    #[error(transparent)]
    Simplification(#[from] SimplifyError),

    #[error(transparent)]
    Strings(#[from] StringError),
}

/// One of the four quadrant intersections of the two bipartitions with
/// the target set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quad {
    /// S ∩ A ∩ C
    Ac,
    /// S ∩ A ∩ D
    Ad,
    /// S ∩ B ∩ C
    Bc,
    /// S ∩ B ∩ D
    Bd,
}

impl Quad {
    pub const ALL: [Quad; 4] = [Quad::Ac, Quad::Ad, Quad::Bc, Quad::Bd];
}

/// The side swaps that bring a case into its canonical orientation
/// (one empty quadrant at S∩B∩C; two empty quadrants at S∩A∩D and
/// S∩B∩C).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Relabeling {
    pub swap_ab: bool,
    pub swap_cd: bool,
}

impl Relabeling {
    pub fn is_identity(&self) -> bool {
        !self.swap_ab && !self.swap_cd
    }
}

/// Classification of a pair of bipartitions against a target set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTag {
    /// Which equation-system arity governs the case: all four quadrants
    /// nonempty, exactly one empty, or a diagonal pair empty.
    pub arity: LemmaArity,
    /// The empty quadrants, in the original orientation.
    pub empty_quads: Vec<Quad>,
    /// Swaps that move the empties onto their canonical positions.
    pub relabeling: Relabeling,
}

/// The four quadrant intersections in a fixed orientation.
#[derive(Clone, Copy, Debug)]
pub struct Quadrants {
    pub ac: QubitSet,
    pub ad: QubitSet,
    pub bc: QubitSet,
    pub bd: QubitSet,
}

impl Quadrants {
    pub fn of(s: QubitSet, a: QubitSet, b: QubitSet, c: QubitSet, d: QubitSet) -> Self {
        Quadrants {
            ac: s.intersection(a).intersection(c),
            ad: s.intersection(a).intersection(d),
            bc: s.intersection(b).intersection(c),
            bd: s.intersection(b).intersection(d),
        }
    }

    pub fn as_array(&self) -> [QubitSet; 4] {
        [self.ac, self.ad, self.bc, self.bd]
    }
}

fn validate_split_pair(
    s: QubitSet,
    a: QubitSet,
    b: QubitSet,
    c: QubitSet,
    d: QubitSet,
) -> Result<QubitSet, TrichotomyError> {
    let whole = a.union(b).union(c).union(d);
    for (p, q) in [(a, b), (c, d)] {
        if !p.is_disjoint_from(q) || p.union(q) != whole {
            return Err(TrichotomyError::NotABipartition { a: p, b: q, whole });
        }
        if p.intersection(s).is_empty() || q.intersection(s).is_empty() {
            return Err(TrichotomyError::DoesNotSplit { a: p, b: q, s });
        }
    }
    Ok(whole)
}

/// Classify the quadrant pattern of two bipartitions that both split the
/// target set. At most two quadrants can be empty, and two empties can
/// only sit on a diagonal; any other pattern is rejected rather than
/// assumed away.
pub fn classify_case(
    s: QubitSet,
    a: QubitSet,
    b: QubitSet,
    c: QubitSet,
    d: QubitSet,
) -> Result<CaseTag, TrichotomyError> {
    validate_split_pair(s, a, b, c, d)?;
    let quads = Quadrants::of(s, a, b, c, d);
    let empty_quads: Vec<Quad> = Quad::ALL
        .iter()
        .zip(quads.as_array())
        .filter(|(_, set)| set.is_empty())
        .map(|(&q, _)| q)
        .collect();

    let (arity, relabeling) = match empty_quads.as_slice() {
        [] => (LemmaArity::FourSets, Relabeling::default()),
        [one] => {
            let relabeling = match one {
                Quad::Bc => Relabeling::default(),
                Quad::Ac => Relabeling {
                    swap_ab: true,
                    swap_cd: false,
                },
                Quad::Bd => Relabeling {
                    swap_ab: false,
                    swap_cd: true,
                },
                Quad::Ad => Relabeling {
                    swap_ab: true,
                    swap_cd: true,
                },
            };
            (LemmaArity::ThreeSets, relabeling)
        }
        [Quad::Ad, Quad::Bc] => (LemmaArity::TwoSets, Relabeling::default()),
        [Quad::Ac, Quad::Bd] => (
            LemmaArity::TwoSets,
            Relabeling {
                swap_ab: false,
                swap_cd: true,
            },
        ),
        other => return Err(TrichotomyError::ImpossibleQuadPattern(other.to_vec())),
    };

    Ok(CaseTag {
        arity,
        empty_quads,
        relabeling,
    })
}

/// The smallest-index support string whose restriction to `s` is
/// all-ones, or `None` when the state has no weight there (the gate then
/// fixes the state).
pub fn find_all_ones_support(psi: &PureState, s: QubitSet, tol: f64) -> Option<PartialString> {
    let carrier = psi.carrier();
    let ones = PartialString::all_ones(s);
    psi.amplitudes().iter().enumerate().find_map(|(idx, z)| {
        if z.norm() <= tol {
            return None;
        }
        let x = PartialString::from_index_in(carrier, idx);
        (x.restrict(s).ok()? == ones).then_some(x)
    })
}

/// The smallest-index support string with a 0 at qubit `i`.
fn support_with_zero_at(psi: &PureState, i: usize, tol: f64) -> Option<PartialString> {
    let carrier = psi.carrier();
    psi.amplitudes().iter().enumerate().find_map(|(idx, z)| {
        if z.norm() <= tol {
            return None;
        }
        let x = PartialString::from_index_in(carrier, idx);
        (x.bit(i) == Some(false)).then_some(x)
    })
}

/// The coefficient system of a both-separable pair, stored in the
/// canonical orientation of its case.
///
/// Entry a[j][k] is the amplitude of the family string x^A_jk in the
/// A-side factor of the input, and likewise for b (B-side factor),
/// c and d (C- and D-side factors of the output).
#[derive(Clone, Debug)]
pub struct CoefficientSystem {
    pub a: [[Complex64; 2]; 2],
    pub b: [[Complex64; 2]; 2],
    pub c: [[Complex64; 2]; 2],
    pub d: [[Complex64; 2]; 2],
    pub eta: Complex64,
    pub case: CaseTag,
    /// The test string and overlay string the system was built from.
    pub source: (PartialString, PartialString),
}

impl CoefficientSystem {
    /// Collapse to the equation system of the case's arity.
    ///
    /// The case equations carry η on the input side (output products
    /// equal η times input products at the all-ones index), while the
    /// standalone systems in [`crate::lemmas`] carry it on their c·d
    /// side, so the roles swap: the output factors of this system become
    /// the a/b groups of the equation system and the input factors its
    /// c/d groups. The collapsed arity needs a transpose on the
    /// two-index groups to line the equation sets up.
    pub fn to_lemma_system(&self) -> LemmaSystem {
        let transpose = |m: &[[Complex64; 2]; 2]| [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
        match self.case.arity {
            LemmaArity::FourSets => LemmaSystem::FourSets {
                a: self.c,
                b: self.d,
                c: self.a,
                d: self.b,
                eta: self.eta,
            },
            LemmaArity::ThreeSets => LemmaSystem::ThreeSets {
                a: transpose(&self.d),
                b: [self.c[0][0], self.c[1][0]],
                c: [self.b[0][0], self.b[0][1]],
                d: transpose(&self.a),
                eta: self.eta,
            },
            LemmaArity::TwoSets => LemmaSystem::TwoSets {
                a: [self.c[0][0], self.c[1][0]],
                b: [self.d[0][0], self.d[0][1]],
                c: [self.a[0][0], self.a[1][0]],
                d: [self.b[0][0], self.b[0][1]],
                eta: self.eta,
            },
        }
    }
}

fn orient(cert: &SeparationCertificate, swap: bool) -> (QubitSet, QubitSet, PureState, PureState) {
    if swap {
        (
            cert.split.b(),
            cert.split.a(),
            cert.factor_b.clone(),
            cert.factor_a.clone(),
        )
    } else {
        (
            cert.split.a(),
            cert.split.b(),
            cert.factor_a.clone(),
            cert.factor_b.clone(),
        )
    }
}

fn check_certificate(
    label: &str,
    state: &PureState,
    cert: &SeparationCertificate,
) -> Result<(), TrichotomyError> {
    if cert.split.whole() != state.carrier() {
        return Err(TrichotomyError::MismatchedInputs(format!(
            "{label} certificate covers {} but the state carries {}",
            cert.split.whole(),
            state.carrier()
        )));
    }
    // Plain distance: the factors must rebuild the state itself, not
    // just its ray, or the extracted products pick up stray phases.
    let rebuilt = cert.factor_a.tensor(&cert.factor_b)?;
    let residual = state.distance(&rebuilt)?;
    if residual > 1e-6 {
        return Err(TrichotomyError::MismatchedInputs(format!(
            "{label} certificate reconstructs its state only to {residual:.3e}"
        )));
    }
    Ok(())
}

/// Extract the coefficient system of a both-separable pair.
///
/// `phi` must be the gate's output on `psi`, `cert_ab` a separation of
/// the input and `cert_cd` one of the output, `x` a test string for the
/// quadrants, and `u` a support string that is all-ones on `s` (pass
/// `None` in the fixed-point regime, where the all-ones string serves as
/// the overlay).
#[allow(clippy::too_many_arguments)]
pub fn extract_coefficients(
    psi: &PureState,
    phi: &PureState,
    gate: &PhaseGate,
    s: QubitSet,
    cert_ab: &SeparationCertificate,
    cert_cd: &SeparationCertificate,
    x: &PartialString,
    u: Option<&PartialString>,
) -> Result<CoefficientSystem, TrichotomyError> {
    let expected = gate.apply(psi)?;
    if expected.distance(phi)? > 1e-8 {
        return Err(TrichotomyError::MismatchedInputs(
            "phi is not the gate's output on psi".into(),
        ));
    }
    check_certificate("input", psi, cert_ab)?;
    check_certificate("output", phi, cert_cd)?;

    let carrier = psi.carrier();
    let u_eff = match u {
        Some(u) => *u,
        None => PartialString::all_ones(carrier),
    };
    if u_eff.domain() != carrier || u_eff.restrict(s)? != PartialString::all_ones(s) {
        return Err(TrichotomyError::BadOverlayString(u_eff));
    }

    let case = classify_case(
        s,
        cert_ab.split.a(),
        cert_ab.split.b(),
        cert_cd.split.a(),
        cert_cd.split.b(),
    )?;

    // Work in the canonical orientation.
    let (a_set, b_set, factor_a, factor_b) = orient(cert_ab, case.relabeling.swap_ab);
    let (c_set, d_set, factor_c, factor_d) = orient(cert_cd, case.relabeling.swap_cd);

    let quads = Quadrants::of(s, a_set, b_set, c_set, d_set);
    if x.domain() != carrier || !x.is_test_string(&quads.as_array()) {
        return Err(TrichotomyError::NotTestString(*x));
    }

    let family = StringFamily::build(x, &u_eff, a_set, b_set, c_set, d_set)?;
    let mut sys = CoefficientSystem {
        a: [[Complex64::ZERO; 2]; 2],
        b: [[Complex64::ZERO; 2]; 2],
        c: [[Complex64::ZERO; 2]; 2],
        d: [[Complex64::ZERO; 2]; 2],
        eta: gate.eta(),
        case,
        source: (*x, u_eff),
    };
    for j in 0..2 {
        for k in 0..2 {
            sys.a[j][k] = factor_a.amplitude(family.get(Region::A, j, k))?;
            sys.b[j][k] = factor_b.amplitude(family.get(Region::B, j, k))?;
            sys.c[j][k] = factor_c.amplitude(family.get(Region::C, j, k))?;
            sys.d[j][k] = factor_d.amplitude(family.get(Region::D, j, k))?;
        }
    }
    Ok(sys)
}

/// Check the case equations of a coefficient system: the c·d products
/// match the a·b products, with η attached exactly on the all-ones index
/// combination. The index set shrinks with the case arity (16, 8, or 4
/// equations).
pub fn check_case_equations(sys: &CoefficientSystem, tol: f64) -> bool {
    let eta = sys.eta;
    let one = Complex64::ONE;
    let mut worst = 0.0f64;
    match sys.case.arity {
        LemmaArity::FourSets => {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        for m in 0..2 {
                            let phase = if j & k & l & m == 1 { eta } else { one };
                            let diff =
                                sys.c[j][l] * sys.d[k][m] - phase * sys.a[j][k] * sys.b[l][m];
                            worst = worst.max(diff.norm());
                        }
                    }
                }
            }
        }
        LemmaArity::ThreeSets => {
            for j in 0..2 {
                for k in 0..2 {
                    for m in 0..2 {
                        let phase = if j & k & m == 1 { eta } else { one };
                        let diff = sys.c[j][0] * sys.d[k][m] - phase * sys.a[j][k] * sys.b[0][m];
                        worst = worst.max(diff.norm());
                    }
                }
            }
        }
        LemmaArity::TwoSets => {
            for j in 0..2 {
                for m in 0..2 {
                    let phase = if j & m == 1 { eta } else { one };
                    let diff = sys.c[j][0] * sys.d[0][m] - phase * sys.a[j][0] * sys.b[0][m];
                    worst = worst.max(diff.norm());
                }
            }
        }
    }
    worst <= tol
}

/// One side of a witness construction: either assembled from the C- and
/// D-parts of two support strings, or a support string taken whole.
#[derive(Clone, Debug)]
pub enum WitnessSide {
    Composite {
        from_c: PartialString,
        from_d: PartialString,
        combined: PartialString,
    },
    Direct {
        support: PartialString,
    },
}

impl WitnessSide {
    fn full_string(&self) -> &PartialString {
        match self {
            WitnessSide::Composite { combined, .. } => combined,
            WitnessSide::Direct { support } => support,
        }
    }
}

/// A test string with nonvanishing amplitude, together with the
/// intermediate strings that produced it.
#[derive(Clone, Debug)]
pub struct TestWitness {
    pub y: PartialString,
    pub amplitude: Complex64,
    pub side_a: WitnessSide,
    pub side_b: WitnessSide,
    pub relabeling: Relabeling,
}

/// Assemble, per the classified case, a side string carrying zeros in the
/// required quadrants from support strings of the state.
fn composite_side(
    psi: &PureState,
    phi: &PureState,
    quad_c: QubitSet,
    quad_d: QubitSet,
    c_set: QubitSet,
    d_set: QubitSet,
    tol: f64,
) -> Result<WitnessSide, TrichotomyError> {
    let i_c = quad_c.min_index().expect("quadrant checked nonempty");
    let from_c = support_with_zero_at(psi, i_c, tol).ok_or_else(|| {
        TrichotomyError::InternalContradiction {
            stage: "support lookup",
            detail: format!(
                "no support string with qubit {i_c} = 0; the gate reduces there, \
                 contradicting non-simplification"
            ),
        }
    })?;
    let i_d = quad_d.min_index().expect("quadrant checked nonempty");
    let from_d = support_with_zero_at(psi, i_d, tol).ok_or_else(|| {
        TrichotomyError::InternalContradiction {
            stage: "support lookup",
            detail: format!(
                "no support string with qubit {i_d} = 0; the gate reduces there, \
                 contradicting non-simplification"
            ),
        }
    })?;
    let combined = from_c.restrict(c_set)?.union(&from_d.restrict(d_set)?)?;

    // Strings with a zero inside the targets are fixed by the gate, so
    // input and output must agree on them.
    let on_input = psi.amplitude(&combined)?;
    let on_output = phi.amplitude(&combined)?;
    if (on_input - on_output).norm() > 1e-9 {
        return Err(TrichotomyError::MismatchedInputs(
            "input and output disagree on a gate-fixed string".into(),
        ));
    }
    if on_input.norm() <= tol {
        return Err(TrichotomyError::InternalContradiction {
            stage: "side recombination",
            detail: format!(
                "recombined side string {combined} has amplitude {:.3e}; \
                 the output factorization should have kept it nonzero",
                on_input.norm()
            ),
        });
    }
    Ok(WitnessSide::Composite {
        from_c,
        from_d,
        combined,
    })
}

fn direct_side(psi: &PureState, quad: QubitSet, tol: f64) -> Result<WitnessSide, TrichotomyError> {
    let i = quad.min_index().expect("quadrant checked nonempty");
    let support = support_with_zero_at(psi, i, tol).ok_or_else(|| {
        TrichotomyError::InternalContradiction {
            stage: "support lookup",
            detail: format!(
                "no support string with qubit {i} = 0; the gate reduces there, \
                 contradicting non-simplification"
            ),
        }
    })?;
    Ok(WitnessSide::Direct { support })
}

/// Construct a test string with nonzero amplitude, following the case
/// construction on the canonical orientation.
///
/// Requires a state the gate does not fix outright; a reduction-type
/// simplification is allowed in, and surfaces as an internal
/// contradiction when the construction runs into the pinned qubit. The
/// same error reports any recombined string whose amplitude vanishes,
/// which on faithful inputs cannot happen.
#[allow(clippy::too_many_arguments)]
pub fn construct_witness(
    psi: &PureState,
    phi: &PureState,
    s: QubitSet,
    a: QubitSet,
    b: QubitSet,
    c: QubitSet,
    d: QubitSet,
    case: &CaseTag,
    tol: f64,
) -> Result<TestWitness, TrichotomyError> {
    let verdict = detect_simplification(psi, s, tol)?;
    if verdict.kind == SimplificationKind::FixedPoint {
        return Err(TrichotomyError::SimplifiesOutright);
    }
    if classify_case(s, a, b, c, d)? != *case {
        return Err(TrichotomyError::MismatchedInputs(
            "case tag does not match the given sets".into(),
        ));
    }

    // Move to the canonical orientation.
    let (a_set, b_set) = if case.relabeling.swap_ab {
        (b, a)
    } else {
        (a, b)
    };
    let (c_set, d_set) = if case.relabeling.swap_cd {
        (d, c)
    } else {
        (c, d)
    };
    let quads = Quadrants::of(s, a_set, b_set, c_set, d_set);

    let (side_a, side_b) = match case.arity {
        LemmaArity::FourSets => (
            composite_side(psi, phi, quads.ac, quads.ad, c_set, d_set, tol)?,
            composite_side(psi, phi, quads.bc, quads.bd, c_set, d_set, tol)?,
        ),
        LemmaArity::ThreeSets => (
            composite_side(psi, phi, quads.ac, quads.ad, c_set, d_set, tol)?,
            direct_side(psi, s.intersection(b_set), tol)?,
        ),
        LemmaArity::TwoSets => (
            direct_side(psi, s.intersection(a_set), tol)?,
            direct_side(psi, s.intersection(b_set), tol)?,
        ),
    };

    let y = side_a
        .full_string()
        .restrict(a_set)?
        .union(&side_b.full_string().restrict(b_set)?)?;
    assert!(
        y.is_test_string(&quads.as_array()),
        "construction must yield a test string"
    );

    let amplitude = psi.amplitude(&y)?;
    if amplitude.norm() <= tol {
        return Err(TrichotomyError::InternalContradiction {
            stage: "final recombination",
            detail: format!(
                "witness {y} has amplitude {:.3e}; with a separable input \
                 the side amplitudes should have multiplied to a nonzero value",
                amplitude.norm()
            ),
        });
    }

    Ok(TestWitness {
        y,
        amplitude,
        side_a,
        side_b,
        relabeling: case.relabeling,
    })
}

/// Everything needed to reproduce a failed trichotomy check offline.
#[derive(Clone, Debug)]
pub struct CounterexampleDump {
    pub state: PureState,
    pub targets: QubitSet,
    pub theta: f64,
    pub sep_tol: f64,
    pub zero_tol: f64,
    pub input_splits: Vec<SplitDiagnostic>,
    pub output_splits: Vec<SplitDiagnostic>,
}

/// Per-branch verdicts for one (state, targets, phase) triple.
#[derive(Clone, Debug)]
pub struct TrichotomyReport {
    pub input_entangled: bool,
    pub output_entangled: bool,
    pub simplification: SimplificationVerdict,
    pub input_certificate: Option<SeparationCertificate>,
    pub output_certificate: Option<SeparationCertificate>,
    pub input_splits: Vec<SplitDiagnostic>,
    pub output_splits: Vec<SplitDiagnostic>,
    /// The disjunction the trichotomy promises. Always true on a correct
    /// build; a false value comes with a counterexample dump.
    pub holds: bool,
    pub counterexample: Option<CounterexampleDump>,
}

impl TrichotomyReport {
    /// Branch flags in order: input S-entangled, output S-entangled,
    /// simplifies.
    pub fn branches(&self) -> (bool, bool, bool) {
        (
            self.input_entangled,
            self.output_entangled,
            self.simplification.simplifies(),
        )
    }

    /// Label like "(2)" or "(1),(3)" naming the branches that fired.
    pub fn branch_label(&self) -> String {
        let (b1, b2, b3) = self.branches();
        let mut parts = Vec::new();
        if b1 {
            parts.push("(1)");
        }
        if b2 {
            parts.push("(2)");
        }
        if b3 {
            parts.push("(3)");
        }
        parts.join(",")
    }
}

/// Evaluate all three branches for the gate with phase e^{iθ} on `s`.
///
/// The branches are checked independently rather than short-circuited so
/// the report shows exactly which of them fire.
pub fn verify_trichotomy(
    psi: &PureState,
    s: QubitSet,
    theta: f64,
    sep_tol: f64,
    zero_tol: f64,
) -> Result<TrichotomyReport, TrichotomyError> {
    if s.len() < 2 {
        return Err(TrichotomyError::TargetsTooSmall(s));
    }
    let gate = PhaseGate::new(s, theta)?;
    let phi = gate.apply(psi)?;

    let input_scan = separation_scan(psi, s, sep_tol)?;
    let output_scan = separation_scan(&phi, s, sep_tol)?;
    let simplification = detect_simplification(psi, s, zero_tol)?;

    let input_entangled = input_scan.certificate.is_none();
    let output_entangled = output_scan.certificate.is_none();
    let holds = input_entangled || output_entangled || simplification.simplifies();

    let counterexample = (!holds).then(|| CounterexampleDump {
        state: psi.clone(),
        targets: s,
        theta,
        sep_tol,
        zero_tol,
        input_splits: input_scan.splits.clone(),
        output_splits: output_scan.splits.clone(),
    });

    Ok(TrichotomyReport {
        input_entangled,
        output_entangled,
        simplification,
        input_certificate: input_scan.certificate,
        output_certificate: output_scan.certificate,
        input_splits: input_scan.splits,
        output_splits: output_scan.splits,
        holds,
        counterexample,
    })
}

/// [`verify_trichotomy`] at the crate's standard tolerances.
pub fn verify_trichotomy_default(
    psi: &PureState,
    s: QubitSet,
    theta: f64,
) -> Result<TrichotomyReport, TrichotomyError> {
    verify_trichotomy(
        psi,
        s,
        theta,
        crate::tolerance::SEPARABILITY_TOL,
        crate::tolerance::AMPLITUDE_ZERO_TOL,
    )
}
