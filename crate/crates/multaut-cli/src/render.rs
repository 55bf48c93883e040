//! Deterministic text and JSON rendering.
//!
//! Floats print as the shortest decimal that parses back to the same
//! double, so emitted JSON round-trips exactly and integral values come
//! out bare: 7.0 prints as 7. Object keys are written in sorted order by
//! construction.

use multaut::{ComplexAuto, LatticeFixingAdditiveAuto};
use num_complex::Complex64;

pub fn float(v: f64) -> String {
    format!("{v}")
}

/// Deviation figures for reports: 0 stays bare, anything else uses
/// exponent notation (still shortest round-trip digits).
pub fn deviation(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:e}")
    }
}

pub enum Scalar {
    Int(i64),
    Float(f64),
}

/// Keys must be passed in sorted order.
pub fn object(fields: &[(&str, Scalar)]) -> String {
    debug_assert!(fields.windows(2).all(|w| w[0].0 < w[1].0));
    let body: Vec<String> = fields
        .iter()
        .map(|(key, value)| {
            let rendered = match value {
                Scalar::Int(i) => i.to_string(),
                Scalar::Float(f) => float(*f),
            };
            format!("\"{key}\":{rendered}")
        })
        .collect();
    format!("{{{}}}", body.join(","))
}

pub fn complex_params(f: &ComplexAuto) -> String {
    object(&[
        ("conj", Scalar::Int(i64::from(f.conj_sign()))),
        ("im_alpha", Scalar::Float(f.im_alpha())),
        ("re_alpha", Scalar::Float(f.re_alpha())),
    ])
}

pub fn lattice_params(phi: &LatticeFixingAdditiveAuto) -> String {
    object(&[
        ("alpha_im", Scalar::Float(phi.alpha().im)),
        ("alpha_re", Scalar::Float(phi.alpha().re)),
        ("eta", Scalar::Int(i64::from(phi.eta()))),
    ])
}

pub fn point(z: Complex64) -> String {
    object(&[
        ("im", Scalar::Float(z.im)),
        ("re", Scalar::Float(z.re)),
    ])
}
