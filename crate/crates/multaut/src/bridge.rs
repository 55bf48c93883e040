//! Additive automorphisms of ℝ and ℂ, and the bridge to the
//! multiplicative side.
//!
//! Continuous additive automorphisms are linear: x ↦ αx on ℝ, and
//! x + iy ↦ αx + βy on ℂ viewed as a real plane with basis {1, i}, the
//! pair (α, β) invertible as a real 2×2 matrix. Inside the complex family
//! sits the subgroup that fixes the lattice 2πiℤ set-wise:
//!
//! ```text
//! φ_{η,α}(b + ai) = η·ai + α·b          η = ±1, Re α ≠ 0
//! ```
//!
//! These matter because exp: (ℂ, +) → (ℂ*, ·) is a surjective
//! homomorphism with kernel 2πiℤ, so an additive automorphism that
//! respects the kernel descends to a multiplicative one. Concretely, with
//! L the principal logarithm branch, exp ∘ φ_{η,α} ∘ L is the
//! multiplicative automorphism with parameter triple (Re α, Im α, η), and
//! [`to_multiplicative`] / [`from_multiplicative`] transcribe parameters
//! back and forth; the pointwise agreement of the two routes is the
//! bridge-coherence property the tests check.
//!
//! [`ComplexAdditiveAuto::fixes_lattice`] makes the lattice condition
//! executable: set-wise fixing is an infinite statement, so it is checked
//! on the window 2πik, |k| ≤ k_max, by requiring every image to land on
//! the lattice and the induced index map to permute the window.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::complex::ComplexAuto;
use crate::Error;

/// Default window half-width for [`ComplexAdditiveAuto::fixes_lattice`].
pub const DEFAULT_LATTICE_WINDOW: i64 = 16;

/// The additive automorphism x ↦ αx of ℝ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealAdditiveAuto {
    alpha: f64,
}

impl RealAdditiveAuto {
    /// Builds x ↦ αx; α = 0 is the non-injective collapse and is refused.
    pub fn new(alpha: f64) -> Result<Self, Error> {
        if !alpha.is_finite() {
            return Err(Error::NonFinite("alpha"));
        }
        if alpha == 0.0 {
            return Err(Error::InvalidBasis);
        }
        Ok(RealAdditiveAuto { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.alpha * x
    }
}

/// The additive automorphism x + iy ↦ αx + βy of ℂ, i.e. an invertible
/// real-linear map recorded by the images α, β of the basis {1, i}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexAdditiveAuto {
    alpha: Complex64,
    beta: Complex64,
}

impl ComplexAdditiveAuto {
    /// Builds x + iy ↦ αx + βy. Fails with InvalidBasis exactly when the
    /// determinant Re(α)·Im(β) − Im(α)·Re(β) vanishes, i.e. when β ∈ αℝ
    /// and the images of 1 and i do not span the plane.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self, Error> {
        if !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(Error::NonFinite("alpha"));
        }
        if !beta.re.is_finite() || !beta.im.is_finite() {
            return Err(Error::NonFinite("beta"));
        }
        let candidate = ComplexAdditiveAuto { alpha, beta };
        if candidate.det() == 0.0 {
            return Err(Error::InvalidBasis);
        }
        Ok(candidate)
    }

    /// Image of 1.
    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    /// Image of i.
    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// Determinant of the underlying real 2×2 matrix.
    pub fn det(&self) -> f64 {
        self.alpha.re * self.beta.im - self.alpha.im * self.beta.re
    }

    /// α·Re(z) + β·Im(z).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        Complex64::new(
            self.alpha.re * z.re + self.beta.re * z.im,
            self.alpha.im * z.re + self.beta.im * z.im,
        )
    }

    /// Windowed check that the map fixes 2πiℤ set-wise. Each lattice point
    /// 2πik for |k| ≤ k_max must map to within 1e−9 (absolute) of some
    /// lattice point 2πi·m, and k ↦ m must permute the window: any escape
    /// from the window, repeat, or off-lattice image is a refusal.
    ///
    /// A true set-wise fixer permutes every centered window (it acts as
    /// k ↦ ±k), so the surrogate has no false negatives; scaling maps like
    /// ψ(2πik) = 2πi·2k are caught when 2k leaves the window.
    pub fn fixes_lattice(&self, k_max: i64) -> bool {
        assert!(k_max >= 1, "window half-width must be at least 1");
        let mut hit = vec![false; (2 * k_max + 1) as usize];
        for k in -k_max..=k_max {
            let image = self.eval(Complex64::new(0.0, TAU * k as f64));
            let m = (image.im / TAU).round();
            let target = Complex64::new(0.0, TAU * m);
            if (image - target).norm() > 1e-9 {
                return false;
            }
            if m < -(k_max as f64) || m > k_max as f64 {
                return false;
            }
            let slot = (m as i64 + k_max) as usize;
            if hit[slot] {
                return false;
            }
            hit[slot] = true;
        }
        true
    }
}

/// The lattice-fixing additive automorphism φ_{η,α}: b + ai ↦ η·ai + α·b.
///
/// η flips or keeps the imaginary axis and α is the image of 1, with
/// Re α ≠ 0 so that the map descends to a multiplicative automorphism
/// under exp (the triple (Re α, Im α, η) needs a nonzero first entry).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeFixingAdditiveAuto {
    eta: i8,
    alpha: Complex64,
}

impl LatticeFixingAdditiveAuto {
    pub fn new(eta: i8, alpha: Complex64) -> Result<Self, Error> {
        if eta != 1 && eta != -1 {
            return Err(Error::InvalidSign(eta as i64));
        }
        if !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(Error::NonFinite("alpha"));
        }
        if alpha.re == 0.0 {
            return Err(Error::ZeroRealPart);
        }
        Ok(LatticeFixingAdditiveAuto { eta, alpha })
    }

    pub fn eta(&self) -> i8 {
        self.eta
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    /// φ_{η,α}(b + ai) = η·ai + α·b with b = Re z, a = Im z.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        Complex64::new(
            self.alpha.re * z.re,
            self.alpha.im * z.re + (self.eta as f64) * z.im,
        )
    }

    /// The same map as a general additive automorphism: β = η·i.
    pub fn as_complex_additive(&self) -> ComplexAdditiveAuto {
        ComplexAdditiveAuto {
            alpha: self.alpha,
            beta: Complex64::new(0.0, self.eta as f64),
        }
    }

    /// Windowed lattice check; see
    /// [`ComplexAdditiveAuto::fixes_lattice`]. Always true for this type
    /// (the induced index map is k ↦ ηk), which the tests confirm.
    pub fn fixes_lattice(&self, k_max: i64) -> bool {
        self.as_complex_additive().fixes_lattice(k_max)
    }

    /// self ∘ other (other applied first). The result's parameters are
    /// re-derived from images of the basis: α from (self ∘ other)(1) and
    /// η from the imaginary part of (self ∘ other)(i), keeping one
    /// canonical parameterization instead of a matrix product.
    pub fn compose(&self, other: &Self) -> Self {
        let alpha = self.eval(other.eval(Complex64::new(1.0, 0.0)));
        let image_of_i = self.eval(other.eval(Complex64::new(0.0, 1.0)));
        LatticeFixingAdditiveAuto {
            eta: if image_of_i.im > 0.0 { 1 } else { -1 },
            alpha,
        }
    }
}

impl fmt::Display for LatticeFixingAdditiveAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.eta == 1 { "+1" } else { "-1" };
        write!(f, "phi_({}, {}+{}i)", sign, self.alpha.re, self.alpha.im)
    }
}

/// The principal branch of the complex logarithm: ln|z| + i·arg(z) with
/// arg ∈ (−π, π]. Real-axis arguments are pinned to exactly 0 (positive
/// side) or π (negative side) so that a −0.0 imaginary part cannot leak
/// the out-of-branch value −π out of atan2.
pub fn principal_log(z: Complex64) -> Result<Complex64, Error> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::LogOfZero);
    }
    let arg = if z.im == 0.0 {
        if z.re > 0.0 {
            0.0
        } else {
            PI
        }
    } else {
        z.im.atan2(z.re)
    };
    Ok(Complex64::new(z.norm().ln(), arg))
}

/// Parameter transcription φ_{η,α} ↦ ε_{α,η}: the multiplicative
/// automorphism induced by exp ∘ φ ∘ L, as the triple (Re α, Im α, η).
pub fn to_multiplicative(f: &LatticeFixingAdditiveAuto) -> ComplexAuto {
    ComplexAuto::new(f.alpha().re, f.alpha().im, f.eta())
        .expect("lattice-fixing invariants imply a valid triple")
}

/// Inverse transcription ε_{a+ib, u} ↦ φ_{u, a+ib}; round trips with
/// [`to_multiplicative`] bit-exactly since both directions copy fields.
pub fn from_multiplicative(g: &ComplexAuto) -> LatticeFixingAdditiveAuto {
    LatticeFixingAdditiveAuto {
        eta: g.conj_sign(),
        alpha: g.alpha(),
    }
}

impl Serialize for LatticeFixingAdditiveAuto {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LatticeFixingAdditiveAuto", 4)?;
        s.serialize_field("kind", "additive-lattice")?;
        s.serialize_field("eta", &self.eta)?;
        s.serialize_field("alpha_re", &self.alpha.re)?;
        s.serialize_field("alpha_im", &self.alpha.im)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct LatticeWire {
    #[serde(default)]
    kind: Option<String>,
    eta: i8,
    alpha_re: f64,
    alpha_im: f64,
}

impl<'de> Deserialize<'de> for LatticeFixingAdditiveAuto {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = LatticeWire::deserialize(deserializer)?;
        if let Some(kind) = &wire.kind {
            if kind != "additive-lattice" {
                return Err(D::Error::custom(format!(
                    "expected kind \"additive-lattice\", got \"{kind}\""
                )));
            }
        }
        LatticeFixingAdditiveAuto::new(wire.eta, Complex64::new(wire.alpha_re, wire.alpha_im))
            .map_err(D::Error::custom)
    }
}

impl Serialize for ComplexAdditiveAuto {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ComplexAdditiveAuto", 5)?;
        s.serialize_field("kind", "additive")?;
        s.serialize_field("alpha_re", &self.alpha.re)?;
        s.serialize_field("alpha_im", &self.alpha.im)?;
        s.serialize_field("beta_re", &self.beta.re)?;
        s.serialize_field("beta_im", &self.beta.im)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct AdditiveWire {
    #[serde(default)]
    kind: Option<String>,
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
}

impl<'de> Deserialize<'de> for ComplexAdditiveAuto {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = AdditiveWire::deserialize(deserializer)?;
        if let Some(kind) = &wire.kind {
            if kind != "additive" {
                return Err(D::Error::custom(format!(
                    "expected kind \"additive\", got \"{kind}\""
                )));
            }
        }
        ComplexAdditiveAuto::new(
            Complex64::new(wire.alpha_re, wire.alpha_im),
            Complex64::new(wire.beta_re, wire.beta_im),
        )
        .map_err(D::Error::custom)
    }
}
