//! Deterministic random streams.
//!
//! Everything random in this crate flows through [`SeededRng`], a thin
//! wrapper over the ChaCha8 stream cipher. ChaCha is counter based, so a
//! given seed produces the same sequence on every platform, and per-trial
//! streams can be derived functionally with [`derive_seed`]. Gaussian
//! variates come from Box–Muller on that stream rather than from a
//! distribution crate, keeping the byte-for-byte output stable.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Mix a base seed with a stream index (SplitMix64 finalizer).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A seeded, portable random stream.
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Stream for sub-task `index` of a computation seeded with `seed`.
    pub fn derived(seed: u64, index: u64) -> Self {
        Self::new(derive_seed(seed, index))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform on [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on (0, 1]; safe as a logarithm argument.
    fn uniform_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// A pair of independent standard normals (Box–Muller).
    pub fn normal_pair(&mut self) -> (f64, f64) {
        let r = (-2.0 * self.uniform_open().ln()).sqrt();
        let angle = TWO_PI * self.uniform();
        (r * angle.cos(), r * angle.sin())
    }

    /// Standard complex Gaussian (independent N(0,1) real and imaginary
    /// parts).
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let (re, im) = self.normal_pair();
        Complex64::new(re, im)
    }

    /// Uniform point on the complex unit circle.
    pub fn unit_phase(&mut self) -> Complex64 {
        Complex64::from_polar(1.0, TWO_PI * self.uniform())
    }

    /// Uniform index in [0, bound). `bound` must be nonzero.
    pub fn index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        // Modulo bias is < 2^-40 for desk-scale bounds; irrelevant here.
        (self.next_u64() % bound as u64) as usize
    }

    pub fn flag(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}
