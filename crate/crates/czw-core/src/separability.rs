//! Deciding whether a pure state factors across a bipartition that
//! splits a target set.
//!
//! A state is S-separable when some bipartition (A,B) of its qubits with
//! both sides meeting S factors it into a product. Numerically this is a
//! rank-one test on the matricized state: reshape the amplitudes into a
//! 2^|A| × 2^|B| matrix and ask whether the second singular value
//! vanishes. A second, independent detector checks all 2×2 minors, so
//! the two routes can cross-validate each other. A successful detection
//! is returned as a [`SeparationCertificate`] carrying the factor states,
//! which reconstruct the input by a tensor product.

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{svd, CMatrix};
use crate::state::{PureState, StateError};
use crate::strings::{PartialString, QubitSet};
use crate::tolerance::AMPLITUDE_ZERO_TOL;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SepError {
    #[error("the sides {0} and {1} are not disjoint or not both nonempty")]
    InvalidSplit(QubitSet, QubitSet),

    #[error("split {split} does not cover the carrier {carrier}")]
    SplitCarrierMismatch { split: QubitSet, carrier: QubitSet },

    #[error("target set {0} has fewer than two members")]
    TargetsTooSmall(QubitSet),

    #[error("target set {targets} is not contained in the carrier {carrier}")]
    TargetsOutsideCarrier {
        targets: QubitSet,
        carrier: QubitSet,
    },

    #[error("matricization across {split:?} is not rank one (σ₂ = {sigma2:.3e})")]
    NotRankOne { split: Bipartition, sigma2: f64 },

    #[error(transparent)]
    State(#[from] StateError),
}

/// An ordered pair of disjoint nonempty qubit sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    a: QubitSet,
    b: QubitSet,
}

impl Bipartition {
    pub fn new(a: QubitSet, b: QubitSet) -> Result<Self, SepError> {
        if a.is_empty() || b.is_empty() || !a.is_disjoint_from(b) {
            return Err(SepError::InvalidSplit(a, b));
        }
        Ok(Bipartition { a, b })
    }

    pub fn a(&self) -> QubitSet {
        self.a
    }

    pub fn b(&self) -> QubitSet {
        self.b
    }

    pub fn whole(&self) -> QubitSet {
        self.a.union(self.b)
    }

    /// True when both sides meet `s`.
    pub fn splits(&self, s: QubitSet) -> bool {
        !self.a.intersection(s).is_empty() && !self.b.intersection(s).is_empty()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            a: self.b,
            b: self.a,
        }
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}|{})", self.a, self.b)
    }
}

/// Every unordered bipartition of {1..n} with both sides meeting `s`,
/// oriented so that side A contains the smallest member of `s`, ordered
/// by |A| ascending and then lexicographically by A's members.
///
/// Empty when `s` has fewer than two members: no bipartition can split it.
pub fn bipartitions_splitting(s: QubitSet, n: usize) -> Vec<Bipartition> {
    let Some(anchor) = s.min_index() else {
        return Vec::new();
    };
    if s.len() < 2 {
        return Vec::new();
    }
    let whole = QubitSet::full(n);
    debug_assert!(s.is_subset_of(whole));

    let mut sides: Vec<QubitSet> = Vec::new();
    for raw in 0..(1u32 << n) {
        let a = QubitSet::from_indices((1..=n).filter(|&i| raw & (1 << (i - 1)) != 0)).unwrap();
        if !a.contains(anchor) || a == whole || s.is_subset_of(a) {
            continue;
        }
        sides.push(a);
    }
    sides.sort_by_key(|a| (a.len(), a.iter().collect::<Vec<_>>()));
    sides
        .into_iter()
        .map(|a| Bipartition {
            a,
            b: a.complement_within(n),
        })
        .collect()
}

/// Matricize a state across a bipartition of its carrier: entry (y, z)
/// is the amplitude of ∣y ∪ z⟩, rows indexed by strings on side A and
/// columns by strings on side B.
pub fn reshape(psi: &PureState, split: &Bipartition) -> Result<CMatrix, SepError> {
    if split.whole() != psi.carrier() {
        return Err(SepError::SplitCarrierMismatch {
            split: split.whole(),
            carrier: psi.carrier(),
        });
    }
    let carrier = psi.carrier();
    let width = carrier.len();
    let wa = split.a.len();
    let wb = split.b.len();

    // Route each carrier bit to its row or column position.
    let mut to_row = vec![None; width];
    let mut to_col = vec![None; width];
    for i in carrier.iter() {
        let from = width - 1 - carrier.rank_of(i).unwrap();
        if split.a.contains(i) {
            to_row[from] = Some(wa - 1 - split.a.rank_of(i).unwrap());
        } else {
            to_col[from] = Some(wb - 1 - split.b.rank_of(i).unwrap());
        }
    }

    let mut m = CMatrix::zeros(1 << wa, 1 << wb);
    for (idx, &z) in psi.amplitudes().iter().enumerate() {
        let mut row = 0usize;
        let mut col = 0usize;
        for from in 0..width {
            if idx & (1 << from) == 0 {
                continue;
            }
            if let Some(to) = to_row[from] {
                row |= 1 << to;
            } else if let Some(to) = to_col[from] {
                col |= 1 << to;
            }
        }
        m.set(row, col, z);
    }
    Ok(m)
}

/// How a rank decision was reached.
#[derive(Clone, Debug, PartialEq)]
pub enum RankDetail {
    /// Singular values in descending order.
    Svd { singular_values: Vec<f64> },
    /// Largest modulus among all 2×2 minors.
    Minors { max_minor: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankVerdict {
    pub is_rank_one: bool,
    pub detail: RankDetail,
}

impl RankVerdict {
    /// σ₂ when decided by SVD, 0 for matrices with a single row or column.
    pub fn sigma2(&self) -> Option<f64> {
        match &self.detail {
            RankDetail::Svd { singular_values } => {
                Some(singular_values.get(1).copied().unwrap_or(0.0))
            }
            RankDetail::Minors { .. } => None,
        }
    }
}

/// Rank-one test by singular values: rank one iff σ₂ ≤ tol.
pub fn rank_one_svd(m: &CMatrix, tol: f64) -> RankVerdict {
    let s = svd(m);
    let sigma2 = s.singular_values.get(1).copied().unwrap_or(0.0);
    RankVerdict {
        is_rank_one: sigma2 <= tol,
        detail: RankDetail::Svd {
            singular_values: s.singular_values,
        },
    }
}

/// Independent rank-one test: every 2×2 minor of a rank-one matrix
/// vanishes, so rank one iff the largest minor modulus is ≤ tol.
pub fn rank_one_minors(m: &CMatrix, tol: f64) -> RankVerdict {
    let mut max_minor = 0.0f64;
    for r0 in 0..m.rows() {
        for r1 in (r0 + 1)..m.rows() {
            for c0 in 0..m.cols() {
                for c1 in (c0 + 1)..m.cols() {
                    let det = m.get(r0, c0) * m.get(r1, c1) - m.get(r0, c1) * m.get(r1, c0);
                    max_minor = max_minor.max(det.norm());
                }
            }
        }
    }
    RankVerdict {
        is_rank_one: max_minor <= tol,
        detail: RankDetail::Minors { max_minor },
    }
}

/// A bipartition together with unit factor states reconstructing the
/// original state: ψ ≈ factor_a ⊗ factor_b with ‖ψ − factor_a ⊗ factor_b‖
/// = residual.
#[derive(Clone, Debug)]
pub struct SeparationCertificate {
    pub split: Bipartition,
    pub factor_a: PureState,
    pub factor_b: PureState,
    pub residual: f64,
}

/// Extract the factor states across a rank-one bipartition.
///
/// The factors are the dominant singular pair, with the phase fixed so
/// that the first entry of factor A of modulus above the amplitude-zero
/// cutoff is real positive; the compensating phase moves to factor B, so
/// the pair reconstructs the state directly rather than only up to a
/// global phase.
pub fn factorize(
    psi: &PureState,
    split: &Bipartition,
    tol: f64,
) -> Result<(PureState, PureState), SepError> {
    let m = reshape(psi, split)?;
    let dec = svd(&m);
    let sigma1 = dec.singular_values[0];
    let sigma2 = dec.singular_values.get(1).copied().unwrap_or(0.0);
    if sigma2 > tol {
        return Err(SepError::NotRankOne {
            split: *split,
            sigma2,
        });
    }

    let mut a: Vec<Complex64> = (0..m.rows()).map(|r| dec.u.get(r, 0)).collect();
    let mut b: Vec<Complex64> = (0..m.cols())
        .map(|c| dec.v.get(c, 0).conj() * sigma1)
        .collect();

    let lead = a
        .iter()
        .find(|z| z.norm() > AMPLITUDE_ZERO_TOL)
        .copied()
        .unwrap_or(Complex64::ONE);
    let phase = lead / lead.norm();
    for z in a.iter_mut() {
        *z *= phase.conj();
    }
    for z in b.iter_mut() {
        *z *= phase;
    }

    let factor_a = PureState::new_renormalized(split.a, a)?;
    let factor_b = PureState::new_renormalized(split.b, b)?;
    Ok((factor_a, factor_b))
}

/// Search the bipartitions splitting `s` in canonical order and return a
/// certificate for the first one whose matricization is rank one, or
/// `None` when every split fails (the state is S-entangled at `tol`).
pub fn find_separation(
    psi: &PureState,
    s: QubitSet,
    tol: f64,
) -> Result<Option<SeparationCertificate>, SepError> {
    if s.len() < 2 {
        return Err(SepError::TargetsTooSmall(s));
    }
    if !s.is_subset_of(psi.carrier()) {
        return Err(SepError::TargetsOutsideCarrier {
            targets: s,
            carrier: psi.carrier(),
        });
    }
    let n = psi.carrier().len();
    debug_assert_eq!(psi.carrier(), QubitSet::full(n));
    for split in bipartitions_splitting(s, n) {
        let verdict = rank_one_svd(&reshape(psi, &split)?, tol);
        if verdict.is_rank_one {
            let (factor_a, factor_b) = factorize(psi, &split, tol)?;
            let residual = psi.distance(&factor_a.tensor(&factor_b)?)?;
            return Ok(Some(SeparationCertificate {
                split,
                factor_a,
                factor_b,
                residual,
            }));
        }
    }
    Ok(None)
}

/// Per-split singular values gathered while searching for a separation.
#[derive(Clone, Debug)]
pub struct SplitDiagnostic {
    pub split: Bipartition,
    pub singular_values: Vec<f64>,
}

/// Like [`find_separation`], but keeps the singular values of every
/// candidate split for reporting.
#[derive(Clone, Debug)]
pub struct SeparationScan {
    pub certificate: Option<SeparationCertificate>,
    pub splits: Vec<SplitDiagnostic>,
}

impl SeparationScan {
    /// The smallest σ₂ seen across the candidate splits; how close the
    /// state came to separating.
    pub fn best_sigma2(&self) -> Option<f64> {
        self.splits
            .iter()
            .map(|d| d.singular_values.get(1).copied().unwrap_or(0.0))
            .min_by(|x, y| x.partial_cmp(y).unwrap())
    }
}

pub fn separation_scan(psi: &PureState, s: QubitSet, tol: f64) -> Result<SeparationScan, SepError> {
    if s.len() < 2 {
        return Err(SepError::TargetsTooSmall(s));
    }
    if !s.is_subset_of(psi.carrier()) {
        return Err(SepError::TargetsOutsideCarrier {
            targets: s,
            carrier: psi.carrier(),
        });
    }
    let n = psi.carrier().len();
    let mut splits = Vec::new();
    let mut certificate = None;
    for split in bipartitions_splitting(s, n) {
        let dec = svd(&reshape(psi, &split)?);
        let sigma2 = dec.singular_values.get(1).copied().unwrap_or(0.0);
        if certificate.is_none() && sigma2 <= tol {
            let (factor_a, factor_b) = factorize(psi, &split, tol)?;
            let residual = psi.distance(&factor_a.tensor(&factor_b)?)?;
            certificate = Some(SeparationCertificate {
                split,
                factor_a,
                factor_b,
                residual,
            });
        }
        splits.push(SplitDiagnostic {
            split,
            singular_values: dec.singular_values,
        });
    }
    Ok(SeparationScan {
        certificate,
        splits,
    })
}

/// Restriction of a full string to one side of a split, as needed when
/// pairing certificates with strings.
pub fn side_string(x: &PartialString, side: QubitSet) -> PartialString {
    x.restrict(side)
        .expect("side lies inside the string domain")
}
