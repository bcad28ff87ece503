//! Detecting when the phase gate acts trivially on a state.
//!
//! There are exactly two ways this can happen. Either the state has no
//! support on basis strings that are all-ones across the targets, in
//! which case the gate fixes the state outright, or some target qubit is
//! constantly 1 on the support, in which case the gate acts as the same
//! gate with that qubit dropped from the targets. Both conditions are a
//! single pass over the amplitudes.

use thiserror::Error;

use crate::gate::{GateError, PhaseGate};
use crate::state::{PureState, StateError};
use crate::strings::QubitSet;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimplifyError {
    /// Simplification is undefined for an empty target set (the
    /// zero-qubit gate is a global phase).
    #[error("simplification is undefined for an empty target set")]
    EmptyTargets,

    #[error("targets {targets} are not contained in the carrier {carrier}")]
    TargetsOutsideCarrier {
        targets: QubitSet,
        carrier: QubitSet,
    },

    #[error("cannot verify a verdict of kind `none`")]
    NothingToVerify,

    #[error(transparent)]
    Gate(#[from] GateError),

    #[error(transparent)]
    State(#[from] StateError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplificationKind {
    /// No trivial action: the gate genuinely changes the state.
    None,
    /// No support on the all-ones block of the targets; Gψ = ψ.
    FixedPoint,
    /// Some target qubit is constantly 1 on the support; the gate acts
    /// as the smaller gate without it.
    Reduces,
}

/// Outcome of [`detect_simplification`].
///
/// `max_offending_amplitude` is the largest amplitude modulus that had to
/// vanish for the reported verdict (at most the tolerance when the kind
/// is not `None`), or, for `None`, the smallest obstruction over all
/// candidate modes: how far the state is from simplifying.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimplificationVerdict {
    pub kind: SimplificationKind,
    pub witness_index: Option<usize>,
    pub max_offending_amplitude: f64,
}

impl SimplificationVerdict {
    pub fn simplifies(&self) -> bool {
        self.kind != SimplificationKind::None
    }
}

/// Classify the gate's action on `psi` over the target set `s`.
///
/// The fixed-point mode is reported first when both modes hold; among
/// reduction witnesses the smallest qubit index wins.
pub fn detect_simplification(
    psi: &PureState,
    s: QubitSet,
    tol: f64,
) -> Result<SimplificationVerdict, SimplifyError> {
    if s.is_empty() {
        return Err(SimplifyError::EmptyTargets);
    }
    let all_ones_mask = psi.mask_of(s).ok_or(SimplifyError::TargetsOutsideCarrier {
        targets: s,
        carrier: psi.carrier(),
    })?;

    let max_norm_where = |pred: &dyn Fn(usize) -> bool| -> f64 {
        psi.amplitudes()
            .iter()
            .enumerate()
            .filter(|(idx, _)| pred(*idx))
            .map(|(_, z)| z.norm())
            .fold(0.0, f64::max)
    };

    let on_all_ones = max_norm_where(&|idx| idx & all_ones_mask == all_ones_mask);
    if on_all_ones <= tol {
        return Ok(SimplificationVerdict {
            kind: SimplificationKind::FixedPoint,
            witness_index: None,
            max_offending_amplitude: on_all_ones,
        });
    }

    let mut least_obstruction = on_all_ones;
    for i in s.iter() {
        let bit = psi.mask_of(QubitSet::singleton(i)).unwrap();
        let on_zero = max_norm_where(&|idx| idx & bit == 0);
        if on_zero <= tol {
            return Ok(SimplificationVerdict {
                kind: SimplificationKind::Reduces,
                witness_index: Some(i),
                max_offending_amplitude: on_zero,
            });
        }
        least_obstruction = least_obstruction.min(on_zero);
    }

    Ok(SimplificationVerdict {
        kind: SimplificationKind::None,
        witness_index: None,
        max_offending_amplitude: least_obstruction,
    })
}

/// Check a non-`None` verdict against the gate it claims to trivialize:
/// fixed points must satisfy Gψ = ψ and reductions Gψ = G'ψ for the gate
/// G' on the targets minus the witness, both within 2·tol·√dim.
pub fn verify_simplification(
    psi: &PureState,
    gate: &PhaseGate,
    verdict: &SimplificationVerdict,
    tol: f64,
) -> Result<bool, SimplifyError> {
    let bound = 2.0 * tol * (psi.dim() as f64).sqrt();
    let applied = gate.apply(psi)?;
    match verdict.kind {
        SimplificationKind::None => Err(SimplifyError::NothingToVerify),
        SimplificationKind::FixedPoint => Ok(applied.distance(psi)? <= bound),
        SimplificationKind::Reduces => {
            let witness = verdict
                .witness_index
                .ok_or(SimplifyError::NothingToVerify)?;
            let smaller = gate.retargeted(gate.targets().difference(QubitSet::singleton(witness)));
            let reduced = smaller.apply(psi)?;
            Ok(applied.distance(&reduced)? <= bound)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;
    use crate::strings::PartialString;
    use crate::tolerance::AMPLITUDE_ZERO_TOL;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    fn qs(indices: &[usize]) -> QubitSet {
        QubitSet::from_indices(indices.iter().copied()).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const TOL: f64 = AMPLITUDE_ZERO_TOL;

    #[test]
    fn detects_fixed_point() {
        let s = 1.0 / 2f64.sqrt();
        let psi = PureState::new(
            qs(&[1, 2]),
            vec![c(s, 0.0), c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let v = detect_simplification(&psi, qs(&[1, 2]), TOL).unwrap();
        assert_eq!(v.kind, SimplificationKind::FixedPoint);
        assert_eq!(v.witness_index, None);
        assert!(v.max_offending_amplitude <= TOL);
    }

    #[test]
    fn detects_reduction() {
        let s = 1.0 / 2f64.sqrt();
        let psi = PureState::new(
            qs(&[1, 2]),
            vec![c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0), c(s, 0.0)],
        )
        .unwrap();
        let v = detect_simplification(&psi, qs(&[1, 2]), TOL).unwrap();
        assert_eq!(v.kind, SimplificationKind::Reduces);
        assert_eq!(v.witness_index, Some(1));
    }

    #[test]
    fn full_support_does_not_simplify() {
        let psi = PureState::plus_all(qs(&[1, 2]));
        let v = detect_simplification(&psi, qs(&[1, 2]), TOL).unwrap();
        assert_eq!(v.kind, SimplificationKind::None);
        assert!((v.max_offending_amplitude - 0.5).abs() < 1e-12);
    }

    #[test]
    fn empty_targets_rejected() {
        let psi = PureState::plus_all(qs(&[1]));
        assert!(matches!(
            detect_simplification(&psi, QubitSet::EMPTY, TOL),
            Err(SimplifyError::EmptyTargets)
        ));
    }

    #[test]
    fn verify_fixed_point_is_exact() {
        let s = 1.0 / 2f64.sqrt();
        let psi = PureState::new(
            qs(&[1, 2]),
            vec![c(s, 0.0), c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let v = detect_simplification(&psi, qs(&[1, 2]), TOL).unwrap();
        let gate = PhaseGate::new(qs(&[1, 2]), PI).unwrap();
        assert!(verify_simplification(&psi, &gate, &v, 1e-15).unwrap());
    }

    #[test]
    fn verify_reduction_drops_the_pinned_qubit() {
        let s = 1.0 / 2f64.sqrt();
        let psi = PureState::new(
            qs(&[1, 2]),
            vec![c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0), c(s, 0.0)],
        )
        .unwrap();
        let v = detect_simplification(&psi, qs(&[1, 2]), TOL).unwrap();
        let gate = PhaseGate::new(qs(&[1, 2]), PI).unwrap();
        assert!(verify_simplification(&psi, &gate, &v, TOL).unwrap());
    }

    #[test]
    fn verify_reduction_on_random_forced_pattern() {
        // Random state with everything at qubit 3 = 0 zeroed out,
        // S = {1,2,3}, η = i.
        let mut rng = SeededRng::new(17);
        let carrier = qs(&[1, 2, 3, 4]);
        let bit3 = 1usize << (4 - 3); // qubit 3 in a 4-qubit index space
        let amps: Vec<Complex64> = (0..16)
            .map(|idx| {
                if idx & bit3 == 0 {
                    Complex64::ZERO
                } else {
                    rng.complex_gaussian()
                }
            })
            .collect();
        let psi = PureState::new_renormalized(carrier, amps).unwrap();
        let v = detect_simplification(&psi, qs(&[1, 2, 3]), TOL).unwrap();
        assert_eq!(v.kind, SimplificationKind::Reduces);
        assert_eq!(v.witness_index, Some(3));
        let gate = PhaseGate::new(qs(&[1, 2, 3]), PI / 2.0).unwrap();
        assert!(verify_simplification(&psi, &gate, &v, TOL).unwrap());
    }

    #[test]
    fn verdict_survives_gate_application() {
        // The gate preserves zero patterns, so the verdict of ψ and Gψ
        // agree for any phase.
        let mut rng = SeededRng::new(23);
        for trial in 0..50u64 {
            let carrier = qs(&[1, 2, 3]);
            let s = qs(&[1, 2]);
            let amps: Vec<Complex64> = (0..8)
                .map(|idx| {
                    // Zero out a pseudorandom pattern sometimes.
                    if trial % 3 == 0 && idx & 0b100 == 0b100 {
                        Complex64::ZERO
                    } else {
                        rng.complex_gaussian()
                    }
                })
                .collect();
            let psi = PureState::new_renormalized(carrier, amps).unwrap();
            let gate = PhaseGate::new(s, 1.0).unwrap();
            let out = gate.apply(&psi).unwrap();
            let before = detect_simplification(&psi, s, TOL).unwrap();
            let after = detect_simplification(&out, s, TOL).unwrap();
            assert_eq!(before.kind, after.kind);
            assert_eq!(before.witness_index, after.witness_index);
        }
    }

    #[test]
    fn none_verdict_implies_witnesses_exist() {
        let psi = PureState::plus_all(qs(&[1, 2, 3]));
        let s = qs(&[1, 2]);
        let v = detect_simplification(&psi, s, TOL).unwrap();
        assert_eq!(v.kind, SimplificationKind::None);

        // A support string that is all-ones on S exists...
        let mut found_ones = false;
        for idx in 0..8usize {
            let x = PartialString::from_index_in(qs(&[1, 2, 3]), idx);
            if x.restrict(s).unwrap() == PartialString::all_ones(s)
                && psi.amplitude(&x).unwrap().norm() > TOL
            {
                found_ones = true;
            }
        }
        assert!(found_ones);

        // ...and every target qubit has a zero somewhere on the support.
        for i in s.iter() {
            let mut found_zero = false;
            for idx in 0..8usize {
                let x = PartialString::from_index_in(qs(&[1, 2, 3]), idx);
                if x.bit(i) == Some(false) && psi.amplitude(&x).unwrap().norm() > TOL {
                    found_zero = true;
                }
            }
            assert!(found_zero);
        }
    }
}
