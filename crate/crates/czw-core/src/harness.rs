//! Seeded state generators and the fuzz driver.
//!
//! Every family is a pure function of (kind, n, seed): the same inputs
//! yield the same state on any platform, so failures carry everything
//! needed to reproduce them. The fuzz driver sweeps qubit counts, target
//! sets, phases and families, runs the trichotomy verdict per trial, and
//! aggregates which branches fired. On a correct build the failure list
//! is empty; anything else is a tolerance or numerics bug to chase with
//! the attached dump.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use thiserror::Error;

use crate::rng::{derive_seed, SeededRng};
use crate::separability::Bipartition;
use crate::state::{PureState, StateError};
use crate::strings::{PartialString, QubitSet};
use crate::tolerance::{AMPLITUDE_ZERO_TOL, SEPARABILITY_TOL};
use crate::trichotomy::{verify_trichotomy, CounterexampleDump, TrichotomyError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("zeroing the family's amplitude pattern left an empty support")]
    DegenerateFamily,

    #[error("family parameters do not fit a {0}-qubit register")]
    BadFamilyParameters(usize),

    #[error(transparent)]
    State(#[from] StateError),

    #[error(transparent)]
    Trichotomy(#[from] TrichotomyError),
}

/// What kind of state to generate.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyKind {
    /// Normalized vector of independent complex Gaussians.
    Haar,
    /// Independent Haar states on the two sides of a bipartition.
    Product { split: Bipartition },
    /// Haar state with the all-ones block of the targets zeroed out, so
    /// the gate on those targets fixes it.
    ForcedFixedPoint { targets: QubitSet },
    /// Haar state with everything at `pinned` = 0 zeroed out, so the
    /// gate reduces at that qubit.
    ForcedReduce { targets: QubitSet, pinned: usize },
    /// A computational basis state.
    Basis { string: PartialString },
    /// The uniform superposition.
    PlusAll,
}

/// A family together with the seed that makes generation deterministic.
#[derive(Clone, Debug, PartialEq)]
pub struct StateFamily {
    pub kind: FamilyKind,
    pub seed: u64,
}

/// Minimum nonzero amplitude must stay out of the decade around the
/// zero tolerance, so tolerance decisions never flip a verdict.
fn in_boundary_band(psi: &PureState) -> bool {
    psi.amplitudes()
        .iter()
        .map(|z| z.norm())
        .filter(|&r| r > 0.0)
        .any(|r| (AMPLITUDE_ZERO_TOL / 10.0..=AMPLITUDE_ZERO_TOL * 10.0).contains(&r))
}

fn haar(carrier: QubitSet, rng: &mut SeededRng) -> Result<PureState, HarnessError> {
    let amps: Vec<Complex64> = (0..1usize << carrier.len())
        .map(|_| rng.complex_gaussian())
        .collect();
    Ok(PureState::new_renormalized(carrier, amps)?)
}

fn generate_once(
    kind: &FamilyKind,
    n: usize,
    rng: &mut SeededRng,
) -> Result<PureState, HarnessError> {
    let carrier = QubitSet::full(n);
    match kind {
        FamilyKind::Haar => haar(carrier, rng),
        FamilyKind::Product { split } => {
            if split.whole() != carrier {
                return Err(HarnessError::BadFamilyParameters(n));
            }
            let left = haar(split.a(), rng)?;
            let right = haar(split.b(), rng)?;
            Ok(left.tensor(&right)?)
        }
        FamilyKind::ForcedFixedPoint { targets } => {
            if !targets.is_subset_of(carrier) || targets.is_empty() {
                return Err(HarnessError::BadFamilyParameters(n));
            }
            let base = haar(carrier, rng)?;
            let mask = base.mask_of(*targets).expect("targets inside carrier");
            let amps: Vec<Complex64> = base
                .amplitudes()
                .iter()
                .enumerate()
                .map(|(idx, &z)| {
                    if idx & mask == mask {
                        Complex64::ZERO
                    } else {
                        z
                    }
                })
                .collect();
            PureState::new_renormalized(carrier, amps).map_err(|_| HarnessError::DegenerateFamily)
        }
        FamilyKind::ForcedReduce { targets, pinned } => {
            if !targets.contains(*pinned) || !targets.is_subset_of(carrier) {
                return Err(HarnessError::BadFamilyParameters(n));
            }
            let base = haar(carrier, rng)?;
            let bit = base
                .mask_of(QubitSet::singleton(*pinned))
                .expect("pinned qubit inside carrier");
            let amps: Vec<Complex64> = base
                .amplitudes()
                .iter()
                .enumerate()
                .map(|(idx, &z)| if idx & bit == 0 { Complex64::ZERO } else { z })
                .collect();
            PureState::new_renormalized(carrier, amps).map_err(|_| HarnessError::DegenerateFamily)
        }
        FamilyKind::Basis { string } => {
            if string.domain() != carrier {
                return Err(HarnessError::BadFamilyParameters(n));
            }
            Ok(PureState::basis(carrier, string)?)
        }
        FamilyKind::PlusAll => Ok(PureState::plus_all(carrier)),
    }
}

/// Generate a state of the family on n qubits.
///
/// Draws falling into the amplitude boundary band are redrawn from the
/// continuation of the stream (deterministically), so generated states
/// never sit on the zero-tolerance fence.
pub fn generate(family: &StateFamily, n: usize) -> Result<PureState, HarnessError> {
    let mut rng = SeededRng::new(family.seed);
    for _ in 0..64 {
        let psi = generate_once(&family.kind, n, &mut rng)?;
        if !in_boundary_band(&psi) {
            return Ok(psi);
        }
    }
    // Sixty-four consecutive band hits do not happen by chance.
    Err(HarnessError::DegenerateFamily)
}

/// Family selectors for the fuzz sweep; per-trial parameters (splits,
/// pinned qubits, basis strings) are drawn from the trial's stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySelector {
    Haar,
    Product,
    ForcedFixedPoint,
    ForcedReduce,
    Basis,
    PlusAll,
}

impl FamilySelector {
    pub const ALL: [FamilySelector; 6] = [
        FamilySelector::Haar,
        FamilySelector::Product,
        FamilySelector::ForcedFixedPoint,
        FamilySelector::ForcedReduce,
        FamilySelector::Basis,
        FamilySelector::PlusAll,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilySelector::Haar => "haar",
            FamilySelector::Product => "product",
            FamilySelector::ForcedFixedPoint => "fixed-point",
            FamilySelector::ForcedReduce => "reduce",
            FamilySelector::Basis => "basis",
            FamilySelector::PlusAll => "plus",
        }
    }
}

/// Sweep configuration for [`fuzz_trichotomy`].
#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub n_values: Vec<usize>,
    pub theta_values: Vec<f64>,
    pub families: Vec<FamilySelector>,
    pub trials: u64,
    pub seed: u64,
    pub sep_tol: f64,
    pub zero_tol: f64,
}

impl FuzzConfig {
    /// The sweep used throughout: n ∈ {2,3,4}, θ ∈ {π, π/2, 1}, every
    /// family.
    pub fn standard(trials: u64, seed: u64) -> Self {
        FuzzConfig {
            n_values: vec![2, 3, 4],
            theta_values: vec![std::f64::consts::PI, std::f64::consts::FRAC_PI_2, 1.0],
            families: FamilySelector::ALL.to_vec(),
            trials,
            seed,
            sep_tol: SEPARABILITY_TOL,
            zero_tol: AMPLITUDE_ZERO_TOL,
        }
    }
}

/// One trial that did not satisfy the trichotomy, with everything needed
/// to replay it.
#[derive(Clone, Debug)]
pub struct TrialFailure {
    pub trial: u64,
    pub seed: u64,
    pub family: String,
    pub n: usize,
    pub targets: QubitSet,
    pub theta: f64,
    pub dump: CounterexampleDump,
}

/// Aggregated outcome of a sweep.
///
/// The histogram is indexed by the three branch flags packed as bits
/// (input-entangled = 1, output-entangled = 2, simplifies = 4), so index
/// 0 counts trials where no branch fired, which is exactly the failure
/// count.
#[derive(Clone, Debug)]
pub struct FuzzSummary {
    pub trials: u64,
    pub branch_histogram: [u64; 8],
    pub failures: Vec<TrialFailure>,
    pub wall_time: Duration,
}

impl FuzzSummary {
    pub fn histogram_label(index: usize) -> &'static str {
        match index {
            0 => "none",
            1 => "(1)",
            2 => "(2)",
            3 => "(1),(2)",
            4 => "(3)",
            5 => "(1),(3)",
            6 => "(2),(3)",
            7 => "(1),(2),(3)",
            _ => unreachable!(),
        }
    }
}

/// Draw a uniformly random subset of {1..n} with at least `min_len`
/// members.
fn random_targets(rng: &mut SeededRng, n: usize, min_len: usize) -> QubitSet {
    loop {
        let raw = (rng.next_u64() & ((1 << n) - 1)) as u32;
        let s = QubitSet::from_indices((1..=n).filter(|&i| raw & (1 << (i - 1)) != 0)).unwrap();
        if s.len() >= min_len {
            return s;
        }
    }
}

fn random_bipartition(rng: &mut SeededRng, n: usize) -> Bipartition {
    loop {
        let a = random_targets(rng, n, 1);
        let b = a.complement_within(n);
        if !b.is_empty() {
            return Bipartition::new(a, b).expect("disjoint nonempty sides");
        }
    }
}

fn family_for_trial(
    selector: FamilySelector,
    n: usize,
    s: QubitSet,
    rng: &mut SeededRng,
) -> FamilyKind {
    match selector {
        FamilySelector::Haar => FamilyKind::Haar,
        FamilySelector::Product => FamilyKind::Product {
            split: random_bipartition(rng, n),
        },
        FamilySelector::ForcedFixedPoint => FamilyKind::ForcedFixedPoint { targets: s },
        FamilySelector::ForcedReduce => {
            let members: Vec<usize> = s.iter().collect();
            let pinned = members[rng.index(members.len())];
            FamilyKind::ForcedReduce { targets: s, pinned }
        }
        FamilySelector::Basis => {
            let idx = (rng.next_u64() % (1u64 << n)) as usize;
            FamilyKind::Basis {
                string: PartialString::from_index_in(QubitSet::full(n), idx),
            }
        }
        FamilySelector::PlusAll => FamilyKind::PlusAll,
    }
}

/// Run `config.trials` independent trials and aggregate the verdicts.
///
/// Identical configurations produce identical summaries apart from the
/// wall time.
pub fn fuzz_trichotomy(config: &FuzzConfig) -> Result<FuzzSummary, HarnessError> {
    let start = Instant::now();
    let mut histogram = [0u64; 8];
    let mut failures = Vec::new();

    for trial in 0..config.trials {
        let trial_seed = derive_seed(config.seed, trial);
        let mut rng = SeededRng::new(trial_seed);

        let n = config.n_values[rng.index(config.n_values.len())];
        let theta = config.theta_values[rng.index(config.theta_values.len())];
        let selector = config.families[rng.index(config.families.len())];
        let s = random_targets(&mut rng, n, 2);
        let kind = family_for_trial(selector, n, s, &mut rng);

        let family = StateFamily {
            kind,
            seed: derive_seed(trial_seed, 1),
        };
        let psi = generate(&family, n)?;
        let report = verify_trichotomy(&psi, s, theta, config.sep_tol, config.zero_tol)?;

        let (b1, b2, b3) = report.branches();
        let bucket = (b1 as usize) | ((b2 as usize) << 1) | ((b3 as usize) << 2);
        histogram[bucket] += 1;

        if let Some(dump) = report.counterexample {
            failures.push(TrialFailure {
                trial,
                seed: trial_seed,
                family: selector.name().to_string(),
                n,
                targets: s,
                theta,
                dump,
            });
        }
    }

    Ok(FuzzSummary {
        trials: config.trials,
        branch_histogram: histogram,
        failures,
        wall_time: start.elapsed(),
    })
}
