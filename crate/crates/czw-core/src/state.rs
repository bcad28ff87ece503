//! Dense pure states of a register of qubits.
//!
//! A [`PureState`] owns 2^k complex amplitudes for a carrier set of k
//! qubit indices. Full states carry {1..n}; factor states produced by a
//! separation carry one side of a bipartition, so inner products against
//! strings on that side need no global re-indexing. States are immutable
//! after construction and unit norm within [`NORM_TOL`].

use num_complex::Complex64;
use thiserror::Error;

use crate::strings::{PartialString, QubitSet};
use crate::tolerance::{MAX_QUBITS, NORM_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    #[error("amplitude vector has length {got}, carrier {carrier} needs {want}")]
    WrongAmplitudeCount {
        carrier: QubitSet,
        want: usize,
        got: usize,
    },

    #[error("squared norm {norm_sq} deviates from 1 by more than {tol}")]
    NotNormalized { norm_sq: f64, tol: f64 },

    #[error("cannot renormalize a zero vector")]
    ZeroNorm,

    #[error("carrier {carrier} exceeds the {MAX_QUBITS}-qubit cap")]
    TooManyQubits { carrier: QubitSet },

    #[error("string domain {domain} does not match carrier {carrier}")]
    DomainMismatch { domain: QubitSet, carrier: QubitSet },

    #[error("carriers {0} and {1} overlap")]
    OverlappingCarriers(QubitSet, QubitSet),

    #[error("carriers {0} and {1} differ")]
    CarrierMismatch(QubitSet, QubitSet),

    #[error("qubit {0} is not in the carrier {1}")]
    NotInCarrier(usize, QubitSet),
}

/// A unit vector over the basis states of a carrier set of qubits.
///
/// Amplitudes are indexed by strings on the carrier: members ascending,
/// smallest index most significant, so for a carrier {1..n} the basis
/// index of a full string is its bitstring read left to right.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    carrier: QubitSet,
    amps: Vec<Complex64>,
}

impl PureState {
    /// Validate and wrap an amplitude vector.
    pub fn new(carrier: QubitSet, amps: Vec<Complex64>) -> Result<Self, StateError> {
        Self::check_shape(carrier, &amps)?;
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(StateError::NotNormalized {
                norm_sq,
                tol: NORM_TOL,
            });
        }
        Ok(PureState { carrier, amps })
    }

    /// Wrap an amplitude vector, scaling it to unit norm.
    pub fn new_renormalized(
        carrier: QubitSet,
        mut amps: Vec<Complex64>,
    ) -> Result<Self, StateError> {
        Self::check_shape(carrier, &amps)?;
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq <= 0.0 {
            return Err(StateError::ZeroNorm);
        }
        let scale = 1.0 / norm_sq.sqrt();
        for z in amps.iter_mut() {
            *z *= scale;
        }
        Ok(PureState { carrier, amps })
    }

    fn check_shape(carrier: QubitSet, amps: &[Complex64]) -> Result<(), StateError> {
        let k = carrier.len();
        if k > MAX_QUBITS {
            return Err(StateError::TooManyQubits { carrier });
        }
        let want = 1usize << k;
        if amps.len() != want {
            return Err(StateError::WrongAmplitudeCount {
                carrier,
                want,
                got: amps.len(),
            });
        }
        Ok(())
    }

    /// The basis state ∣s⟩ for a string on the carrier.
    pub fn basis(carrier: QubitSet, s: &PartialString) -> Result<Self, StateError> {
        let idx = s.index_in(carrier).ok_or(StateError::DomainMismatch {
            domain: s.domain(),
            carrier,
        })?;
        let mut amps = vec![Complex64::ZERO; 1 << carrier.len()];
        amps[idx] = Complex64::ONE;
        Ok(PureState { carrier, amps })
    }

    /// Uniform superposition ∣+⟩^⊗k over the carrier.
    pub fn plus_all(carrier: QubitSet) -> Self {
        let dim = 1usize << carrier.len();
        let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        PureState {
            carrier,
            amps: vec![amp; dim],
        }
    }

    pub fn carrier(&self) -> QubitSet {
        self.carrier
    }

    pub fn qubit_count(&self) -> usize {
        self.carrier.len()
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// The coefficient of ∣x⟩; the string's domain must equal the carrier.
    pub fn amplitude(&self, x: &PartialString) -> Result<Complex64, StateError> {
        let idx = x.index_in(self.carrier).ok_or(StateError::DomainMismatch {
            domain: x.domain(),
            carrier: self.carrier,
        })?;
        Ok(self.amps[idx])
    }

    /// ⟨self∣other⟩ on a shared carrier.
    pub fn inner(&self, other: &PureState) -> Result<Complex64, StateError> {
        if self.carrier != other.carrier {
            return Err(StateError::CarrierMismatch(self.carrier, other.carrier));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ‖self − other‖.
    pub fn distance(&self, other: &PureState) -> Result<f64, StateError> {
        if self.carrier != other.carrier {
            return Err(StateError::CarrierMismatch(self.carrier, other.carrier));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// min over global phases φ of ‖self − e^{iφ}·other‖, computed by
    /// aligning the phase explicitly (stable even near zero distance).
    pub fn distance_up_to_phase(&self, other: &PureState) -> Result<f64, StateError> {
        let overlap = other.inner(self)?;
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            Complex64::ONE
        };
        self.distance(&other.scaled(phase))
    }

    /// Tensor product across disjoint carriers. The result satisfies
    /// ⟨y∪z∣ψ⊗φ⟩ = ⟨y∣ψ⟩·⟨z∣φ⟩ for all strings y, z on the two carriers.
    pub fn tensor(&self, other: &PureState) -> Result<PureState, StateError> {
        if !self.carrier.is_disjoint_from(other.carrier) {
            return Err(StateError::OverlappingCarriers(self.carrier, other.carrier));
        }
        let carrier = self.carrier.union(other.carrier);
        if carrier.len() > MAX_QUBITS {
            return Err(StateError::TooManyQubits { carrier });
        }
        let width = carrier.len();

        // Shift of each factor bit inside the combined index space.
        let route = |sub: QubitSet| -> Vec<(usize, usize)> {
            sub.iter()
                .map(|i| {
                    let in_sub = sub.len() - 1 - sub.rank_of(i).unwrap();
                    let in_whole = width - 1 - carrier.rank_of(i).unwrap();
                    (in_sub, in_whole)
                })
                .collect()
        };
        let route_a = route(self.carrier);
        let route_b = route(other.carrier);
        let scatter = |idx: usize, route: &[(usize, usize)]| -> usize {
            route
                .iter()
                .fold(0, |acc, &(from, to)| acc | (((idx >> from) & 1) << to))
        };

        let mut amps = vec![Complex64::ZERO; 1 << width];
        for (ia, &za) in self.amps.iter().enumerate() {
            let base = scatter(ia, &route_a);
            for (ib, &zb) in other.amps.iter().enumerate() {
                amps[base | scatter(ib, &route_b)] = za * zb;
            }
        }
        Ok(PureState { carrier, amps })
    }

    /// Exchange the roles of two carrier qubits.
    pub fn swap_qubits(&self, i: usize, j: usize) -> Result<PureState, StateError> {
        for q in [i, j] {
            if !self.carrier.contains(q) {
                return Err(StateError::NotInCarrier(q, self.carrier));
            }
        }
        if i == j {
            return Ok(self.clone());
        }
        let width = self.carrier.len();
        let bit_i = 1usize << (width - 1 - self.carrier.rank_of(i).unwrap());
        let bit_j = 1usize << (width - 1 - self.carrier.rank_of(j).unwrap());
        let mut amps = vec![Complex64::ZERO; self.amps.len()];
        for (idx, &z) in self.amps.iter().enumerate() {
            let mut target = idx & !(bit_i | bit_j);
            if idx & bit_i != 0 {
                target |= bit_j;
            }
            if idx & bit_j != 0 {
                target |= bit_i;
            }
            amps[target] = z;
        }
        Ok(PureState {
            carrier: self.carrier,
            amps,
        })
    }

    /// The state with every amplitude multiplied by `z`.
    pub fn scaled(&self, z: Complex64) -> PureState {
        PureState {
            carrier: self.carrier,
            amps: self.amps.iter().map(|a| a * z).collect(),
        }
    }

    /// Index-space bitmask of `targets` within the carrier, if contained.
    pub(crate) fn mask_of(&self, targets: QubitSet) -> Option<usize> {
        if !targets.is_subset_of(self.carrier) {
            return None;
        }
        let width = self.carrier.len();
        let mut mask = 0usize;
        for i in targets.iter() {
            mask |= 1 << (width - 1 - self.carrier.rank_of(i).unwrap());
        }
        Some(mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;
    use proptest::prelude::*;

    fn qs(indices: &[usize]) -> QubitSet {
        QubitSet::from_indices(indices.iter().copied()).unwrap()
    }

    fn bits(text: &str) -> PartialString {
        PartialString::from_bitstring(text).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_state(carrier: QubitSet, rng: &mut SeededRng) -> PureState {
        let amps: Vec<Complex64> = (0..1usize << carrier.len())
            .map(|_| rng.complex_gaussian())
            .collect();
        PureState::new_renormalized(carrier, amps).unwrap()
    }

    #[test]
    fn construction_validates() {
        let zero = PureState::new(qs(&[1]), vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(zero.amplitude(&bits("0")).unwrap(), c(1.0, 0.0));

        // CZ∣++⟩ literal amplitudes are unit norm by inspection.
        let cz_pp = PureState::new(
            qs(&[1, 2]),
            vec![c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(-0.5, 0.0)],
        )
        .unwrap();
        assert_eq!(cz_pp.amplitude(&bits("11")).unwrap(), c(-0.5, 0.0));

        let plus = PureState::new_renormalized(qs(&[1]), vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((plus.amplitude(&bits("0")).unwrap().re - 1.0 / 2f64.sqrt()).abs() < 1e-15);

        assert!(matches!(
            PureState::new(qs(&[1]), vec![c(1.0, 0.0)]),
            Err(StateError::WrongAmplitudeCount { .. })
        ));
        assert!(matches!(
            PureState::new(qs(&[1]), vec![c(1.0, 0.0), c(1.0, 0.0)]),
            Err(StateError::NotNormalized { .. })
        ));
    }

    #[test]
    #[allow(clippy::approx_constant)] // frozen oracle value, not a constant reference
    fn amplitude_picks_coefficients() {
        let s = 1.0 / 2f64.sqrt();
        let bell = PureState::new(
            qs(&[1, 2]),
            vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)],
        )
        .unwrap();
        assert!((bell.amplitude(&bits("11")).unwrap().re - 0.7071067811865476).abs() < 1e-12);

        let zero = PureState::basis(qs(&[1]), &bits("0")).unwrap();
        assert_eq!(zero.amplitude(&bits("1")).unwrap(), Complex64::ZERO);

        // Mismatched domain is an error.
        assert!(bell.amplitude(&bits("1")).is_err());
    }

    #[test]
    fn tensor_product_examples() {
        let plus = PureState::plus_all(qs(&[1]));
        let zero = PureState::basis(qs(&[2]), &PartialString::all_zeros(qs(&[2]))).unwrap();
        let t = plus.tensor(&zero).unwrap();
        let s = 1.0 / 2f64.sqrt();
        assert!((t.amplitude(&bits("00")).unwrap().re - s).abs() < 1e-15);
        assert!((t.amplitude(&bits("10")).unwrap().re - s).abs() < 1e-15);
        assert_eq!(t.amplitude(&bits("01")).unwrap(), Complex64::ZERO);

        // Carrier order does not matter; index order does.
        let one_on_2 = PureState::basis(qs(&[2]), &PartialString::all_ones(qs(&[2]))).unwrap();
        let zero_on_1 = PureState::basis(qs(&[1]), &PartialString::all_zeros(qs(&[1]))).unwrap();
        let t2 = one_on_2.tensor(&zero_on_1).unwrap();
        assert_eq!(t2.amplitude(&bits("01")).unwrap(), Complex64::ONE);
    }

    #[test]
    #[allow(clippy::approx_constant)] // frozen oracle value, not a constant reference
    fn tensor_on_split_carriers() {
        // Bell pair on {1,3} joined with ∣0⟩ on {2}: check every
        // amplitude against the product rule, then the frozen value.
        let s = 1.0 / 2f64.sqrt();
        let bell = PureState::new(
            qs(&[1, 3]),
            vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)],
        )
        .unwrap();
        let zero = PureState::basis(qs(&[2]), &PartialString::all_zeros(qs(&[2]))).unwrap();
        let t = bell.tensor(&zero).unwrap();

        for idx in 0..8 {
            let x = PartialString::from_index_in(QubitSet::full(3), idx);
            let expect = bell.amplitude(&x.restrict(qs(&[1, 3])).unwrap()).unwrap()
                * zero.amplitude(&x.restrict(qs(&[2])).unwrap()).unwrap();
            assert_eq!(t.amplitude(&x).unwrap(), expect);
        }
        assert!((t.amplitude(&bits("101")).unwrap().re - 0.7071067811865476).abs() < 1e-12);
    }

    #[test]
    fn tensor_rejects_overlap() {
        let a = PureState::plus_all(qs(&[1, 2]));
        let b = PureState::plus_all(qs(&[2, 3]));
        assert!(matches!(
            a.tensor(&b),
            Err(StateError::OverlappingCarriers(..))
        ));
    }

    #[test]
    fn swap_exchanges_bits() {
        let t = PureState::basis(qs(&[1, 2, 3]), &bits("100")).unwrap();
        let swapped = t.swap_qubits(1, 3).unwrap();
        assert_eq!(swapped.amplitude(&bits("001")).unwrap(), Complex64::ONE);
    }

    proptest! {
        #[test]
        fn tensor_factorizes_amplitudes(seed in 0u64..512) {
            let mut rng = SeededRng::new(seed);
            let a = qs(&[1, 3]);
            let b = qs(&[2, 4]);
            let psi_a = random_state(a, &mut rng);
            let psi_b = random_state(b, &mut rng);
            let joint = psi_a.tensor(&psi_b).unwrap();
            prop_assert!((joint.norm() - 1.0).abs() < 1e-12);
            for idx in 0..16usize {
                let x = PartialString::from_index_in(QubitSet::full(4), idx);
                let lhs = joint.amplitude(&x).unwrap();
                let rhs = psi_a.amplitude(&x.restrict(a).unwrap()).unwrap()
                    * psi_b.amplitude(&x.restrict(b).unwrap()).unwrap();
                prop_assert!((lhs - rhs).norm() < 1e-14);
            }
        }

        #[test]
        fn inner_product_conjugates(seed in 0u64..256) {
            let mut rng = SeededRng::new(seed);
            let carrier = qs(&[1, 2, 3]);
            let a = random_state(carrier, &mut rng);
            let b = random_state(carrier, &mut rng);
            let ab = a.inner(&b).unwrap();
            let ba = b.inner(&a).unwrap();
            prop_assert!((ab - ba.conj()).norm() < 1e-12);
        }
    }
}
