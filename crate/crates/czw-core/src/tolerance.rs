//! Numerical tolerances used across the crate.
//!
//! All states are unit vectors and all gate phases are unit modulus, so
//! every threshold below is absolute. Each constant is shared by the
//! modules that must agree on it; none is tuned per test.

/// Absolute tolerance on the squared norm of a statevector.
///
/// Far above double-precision accumulation error at desk scale (n ≤ 24)
/// and far below any meaningful amplitude.
pub const NORM_TOL: f64 = 1e-9;

/// Minimum allowed distance |η − 1| between the gate phase and the
/// identity. Phases closer to 1 than numeric noise would make the η ≠ 1
/// hypothesis meaningless.
pub const PHASE_TOL: f64 = 1e-9;

/// Threshold on σ₂ (and on 2×2 minors) below which a matricized state is
/// declared rank one. Rank-gap instances generated in tests are
/// margin-separated, and double precision SVD at desk scale is accurate
/// to ~1e−13.
pub const SEPARABILITY_TOL: f64 = 1e-8;

/// Amplitudes of unit states with modulus at or below this are treated as
/// zero. Shared by simplification detection and the trichotomy checks so
/// "simplifies" and "does not simplify" use one boundary.
pub const AMPLITUDE_ZERO_TOL: f64 = 1e-9;

/// Residual tolerance for the lemma equation systems (products of entries
/// of unit-scale systems).
pub const LEMMA_RESIDUAL_TOL: f64 = 1e-9;

/// Entries of a lemma system count as nonzero only above this multiple of
/// the residual tolerance; samplers reject the band in between.
pub const LEMMA_NONZERO_FACTOR: f64 = 10.0;

/// Hard cap on the number of qubits (dense storage is 2^n amplitudes).
pub const MAX_QUBITS: usize = 24;
