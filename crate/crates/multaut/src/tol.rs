//! Floating-point comparison helpers shared by tests and the CLI.
//!
//! All approximate checks in this crate use the same shape: the absolute
//! difference is allowed tol·max(1, |x|, |y|). The max with 1 gives an
//! absolute floor near zero (where cancellation makes pure relative error
//! meaningless) and relative behavior at large magnitudes.

use num_complex::Complex64;

/// |x − y| ≤ tol·max(1, |x|, |y|). False if anything is NaN.
pub fn within(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
}

/// Complex analogue, measured in modulus: |x − y| ≤ tol·max(1, |x|, |y|).
pub fn within_c(x: Complex64, y: Complex64, tol: f64) -> bool {
    (x - y).norm() <= tol * x.norm().max(y.norm()).max(1.0)
}
