//! Multiplicative automorphism groups of ℝ, ℂ, and finite fields.
//!
//! A multiplicative automorphism of a field K is a bijection of K fixing 0
//! and preserving products; nothing is asked of addition. This crate makes
//! those groups concrete for three families of fields:
//!
//! * **Finite fields** ([`ff`], [`ffauto`]): every multiplicative
//!   automorphism of 𝔽_q is a power map x ↦ x^α with gcd(α, q − 1) = 1, so
//!   the group is the unit group of ℤ/(q − 1) and can be enumerated.
//! * **The reals** ([`real`]): the group is the odd power functions
//!   ε_α(x) = sign(x)·|x|^α for α ≠ 0, one parameter.
//! * **The complexes** ([`complex`]): maps ε_{α,u} scaling the modulus by a
//!   complex exponent α and optionally conjugating the phase (u = ±1). The
//!   composition law ⋆ on parameter triples, the center, the four
//!   connected components, and a semidirect splitting are all available in
//!   closed form.
//!
//! The [`bridge`] module moves between the multiplicative picture and
//! additive automorphisms of ℂ via the principal logarithm, and
//! [`sampling`] holds the deterministic generator used for randomized
//! checks so results are reproducible bit for bit.
//!
//! ```
//! use multaut::{ComplexAuto, RealAuto};
//!
//! let cube = RealAuto::new(3.0)?;
//! assert_eq!(cube.eval(-2.0), -8.0);
//!
//! // complex maps compose in closed form on their parameter triples
//! let f = ComplexAuto::new(2.0, 1.0, 1)?;
//! let g = ComplexAuto::new(3.0, 4.0, -1)?;
//! assert_eq!(f.compose(&g), ComplexAuto::new(6.0, 7.0, -1)?);
//! # Ok::<(), multaut::Error>(())
//! ```

pub mod bridge;
pub mod complex;
pub mod error;
pub mod ff;
pub mod ffauto;
pub mod nt;
pub mod real;
pub mod sampling;
pub mod tol;

pub use bridge::{ComplexAdditiveAuto, LatticeFixingAdditiveAuto, RealAdditiveAuto};
pub use complex::{ComplexAuto, ComponentTag};
pub use error::Error;
pub use ff::{FieldElement, FiniteField};
pub use ffauto::PowerAutomorphism;
pub use real::RealAuto;
