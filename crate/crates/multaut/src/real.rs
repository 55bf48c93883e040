//! Continuous multiplicative automorphisms of the real line.
//!
//! These form a one-parameter family: every continuous bijection of ℝ that
//! fixes 0 and preserves products is
//!
//! ```text
//! ε_α(x) = x^α        for x > 0
//! ε_α(0) = 0
//! ε_α(x) = −(−x)^α    for x < 0
//! ```
//!
//! for some real α ≠ 0, where x^α = exp(α·ln x). The map α ↦ ε_α turns
//! multiplication of parameters into composition of automorphisms, so the
//! whole group is a copy of (ℝ*, ·): compose by multiplying, invert by
//! taking the reciprocal.
//!
//! The negative branch is not a choice: a multiplicative bijection must
//! send −1 to a square root of 1 other than 1, so ε(−1) = −1 and oddness
//! follows. [`RealAuto::extend_from_positive`] exposes this uniqueness as
//! a named constructor. Discontinuous automorphisms (from a basis of ℚ-
//! generators of ℝ_{>0}) exist but are not representable here.
//!
//! Powers are evaluated with the platform power function, the correctly
//! rounded form of exp(α·ln x); integer-valued results like ε₂(−3) = −9
//! come out exact. Overflow follows IEEE semantics (infinities propagate,
//! nothing panics); parameters that extreme are outside the contract.

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::Error;

/// The automorphism ε_α of (ℝ, ·). Immutable; α is finite and nonzero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealAuto {
    alpha: f64,
}

impl RealAuto {
    /// Builds ε_α. Rejects α = 0 (the constant map 1 on positives is not
    /// injective) and non-finite α.
    pub fn new(alpha: f64) -> Result<Self, Error> {
        if !alpha.is_finite() {
            return Err(Error::NonFinite("alpha"));
        }
        if alpha == 0.0 {
            return Err(Error::ZeroExponent);
        }
        Ok(RealAuto { alpha })
    }

    /// The unique multiplicative automorphism of all of ℝ restricting to
    /// x ↦ x^α on ℝ_{>0}. The extension is forced: 0 ↦ 0 and oddness are
    /// consequences, not choices, so this is the same value `new` builds.
    /// It exists as a named constructor to make that uniqueness a
    /// statement in the API.
    pub fn extend_from_positive(alpha: f64) -> Result<Self, Error> {
        RealAuto::new(alpha)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn is_identity(&self) -> bool {
        self.alpha == 1.0
    }

    /// ε_α(x): x^α on positives, 0 at 0, odd reflection on negatives.
    /// NaN propagates; overflow returns ± infinity per IEEE.
    pub fn eval(&self, x: f64) -> f64 {
        if x > 0.0 {
            x.powf(self.alpha)
        } else if x < 0.0 {
            -(-x).powf(self.alpha)
        } else {
            // +0, −0, and NaN pass through unchanged
            x
        }
    }

    /// self ∘ other (other applied first): ε_α ∘ ε_β = ε_{αβ}.
    ///
    /// The product of nonzero reals is nonzero, so no error arises; with
    /// parameters far outside the contract range the product can spill to
    /// 0 or ∞ in floating point, which is propagated, not trapped.
    pub fn compose(&self, other: &Self) -> Self {
        RealAuto {
            alpha: self.alpha * other.alpha,
        }
    }

    /// The inverse automorphism ε_{1/α}.
    pub fn invert(&self) -> Self {
        RealAuto {
            alpha: 1.0 / self.alpha,
        }
    }

    /// True iff ε_α maps ℚ into ℚ, which happens exactly for α = ±1:
    /// the identity and x ↦ 1/x. Exact comparison, no tolerance.
    pub fn preserves_rationals(&self) -> bool {
        self.alpha == 1.0 || self.alpha == -1.0
    }
}

impl fmt::Display for RealAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eps_{}", self.alpha)
    }
}

impl Serialize for RealAuto {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RealAuto", 2)?;
        s.serialize_field("kind", "real")?;
        s.serialize_field("alpha", &self.alpha)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct RealAutoWire {
    #[serde(default)]
    kind: Option<String>,
    alpha: f64,
}

impl<'de> Deserialize<'de> for RealAuto {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = RealAutoWire::deserialize(deserializer)?;
        if let Some(kind) = &wire.kind {
            if kind != "real" {
                return Err(D::Error::custom(format!(
                    "expected kind \"real\", got \"{kind}\""
                )));
            }
        }
        RealAuto::new(wire.alpha).map_err(D::Error::custom)
    }
}
