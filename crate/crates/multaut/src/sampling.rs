//! Deterministic pseudorandom sampling for randomized checks.
//!
//! Every randomized check in this crate and its CLI draws from the same
//! tiny generator so that reports are reproducible bit for bit across
//! runs, platforms, and reimplementations in other languages:
//!
//! * 64-bit LCG: state ← state·6364136223846793005 + 1442695040888963407
//!   (wrapping), seeded directly with the user's seed; each step's new
//!   state is the output.
//! * Unit doubles: the top 53 bits of the state, scaled by 2⁻⁵³, giving a
//!   uniform value in [0, 1).
//!
//! On top of that sit the two documented sample distributions:
//!
//! * [`Lcg64::complex_sample`]: modulus log-uniform in [10⁻³, 10³) as
//!   10^(−3 + 6u₁), argument π − 2π·u₂ ∈ (−π, π]. Two unit draws each.
//! * [`Lcg64::real_sample`]: magnitude 10^(−3 + 6u₁), sign + iff
//!   u₂ < 1/2. Two unit draws each.
//!
//! Nothing here is cryptographic and the statistical quality is only what
//! an LCG gives; that is enough for coverage sampling, and the explicit
//! spelling-out is the point.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// The fixed 64-bit linear congruential generator.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    /// Starts the stream at `seed`; the first output is
    /// seed·M + C, not the seed itself.
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    /// Advances one step and returns the new state.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        self.state
    }

    /// Uniform in [0, 1): the top 53 bits of the next state over 2⁵³.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * 2f64.powi(-53)
    }

    /// Nonzero complex number with log-uniform modulus in [10⁻³, 10³) and
    /// argument in (−π, π]. Consumes exactly two unit draws, u₁ then u₂.
    pub fn complex_sample(&mut self) -> Complex64 {
        let u1 = self.next_f64();
        let u2 = self.next_f64();
        Complex64::from_polar(10f64.powf(-3.0 + 6.0 * u1), PI - TAU * u2)
    }

    /// Nonzero real with log-uniform magnitude in [10⁻³, 10³) and a fair
    /// sign: positive iff u₂ < 1/2. Consumes exactly two unit draws.
    pub fn real_sample(&mut self) -> f64 {
        let u1 = self.next_f64();
        let u2 = self.next_f64();
        let magnitude = 10f64.powf(-3.0 + 6.0 * u1);
        if u2 < 0.5 {
            magnitude
        } else {
            -magnitude
        }
    }
}
