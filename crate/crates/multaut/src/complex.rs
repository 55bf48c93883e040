//! Continuous multiplicative automorphisms of ℂ.
//!
//! Fix a nonzero complex number z and write it as z = r·s with r = |z| and
//! s on the unit circle. Every continuous multiplicative automorphism of ℂ
//! acts independently on the two factors: the modulus is raised to a
//! complex power α = a + ib with a ≠ 0, and the phase is either kept or
//! conjugated. That gives the two-family parametrization
//!
//! ```text
//! ε_{α, +1}(z) = r^α · s          ε_{α, −1}(z) = r^α · s̄
//! ```
//!
//! with r^α = exp(α·ln r), and 0 ↦ 0 by extension. A [`ComplexAuto`] is
//! the parameter triple (a, b, u).
//!
//! Composition never needs pointwise evaluation: it is the ⋆ law
//!
//! ```text
//! (a, b, u) ⋆ (c, d, v) = (ac, cb + ud, uv)
//! ```
//!
//! with identity (1, 0, +1) and inverse (1/a, −ub/a, u). This module keeps
//! the whole group structure at that parameter level: the center, the four
//! connected components, the rotation-like normal subgroup and the
//! semidirect splitting off of it, plus the subgroup predicates. The ⋆ law
//! on small integer parameters is exact in double precision, which the
//! tests exploit to check group axioms without tolerances.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::Error;

/// Which of the four connected components of the automorphism group a
/// triple lies in, keyed by (sign of a, u).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentTag {
    /// a > 0, u = +1 (contains the identity)
    PosDirect,
    /// a < 0, u = +1
    NegDirect,
    /// a > 0, u = −1 (contains conjugation)
    PosConjugate,
    /// a < 0, u = −1
    NegConjugate,
}

impl fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ComponentTag::PosDirect => "PosDirect",
            ComponentTag::NegDirect => "NegDirect",
            ComponentTag::PosConjugate => "PosConjugate",
            ComponentTag::NegConjugate => "NegConjugate",
        };
        f.write_str(name)
    }
}

/// The automorphism ε_{a+ib, u} of (ℂ, ·) as its parameter triple.
///
/// Invariants: a ≠ 0 exactly (tiny a is legal but ill-conditioned, since
/// the inverse carries 1/a), a and b finite, u ∈ {+1, −1}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexAuto {
    a: f64,
    b: f64,
    u: i8,
}

impl ComplexAuto {
    /// Builds the triple (a, b, u) after checking the invariants.
    pub fn new(a: f64, b: f64, u: i8) -> Result<Self, Error> {
        if !a.is_finite() {
            return Err(Error::NonFinite("re_alpha"));
        }
        if !b.is_finite() {
            return Err(Error::NonFinite("im_alpha"));
        }
        if a == 0.0 {
            return Err(Error::ZeroRealPart);
        }
        if u != 1 && u != -1 {
            return Err(Error::InvalidSign(u as i64));
        }
        Ok(ComplexAuto { a, b, u })
    }

    /// (1, 0, +1): the identity for ⋆ and the identity map on ℂ.
    pub fn identity() -> Self {
        ComplexAuto { a: 1.0, b: 0.0, u: 1 }
    }

    /// (1, 0, −1): complex conjugation.
    pub fn conjugation() -> Self {
        ComplexAuto { a: 1.0, b: 0.0, u: -1 }
    }

    /// Re α.
    pub fn re_alpha(&self) -> f64 {
        self.a
    }

    /// Im α.
    pub fn im_alpha(&self) -> f64 {
        self.b
    }

    /// +1 for the direct family ε_α, −1 for the conjugating family ε̄_α.
    pub fn conj_sign(&self) -> i8 {
        self.u
    }

    /// α = a + ib as one number.
    pub fn alpha(&self) -> Complex64 {
        Complex64::new(self.a, self.b)
    }

    pub fn is_identity(&self) -> bool {
        self.a == 1.0 && self.b == 0.0 && self.u == 1
    }

    /// self ⋆ other, which is the composition self ∘ other (other applied
    /// first): (a, b, u) ⋆ (c, d, v) = (ac, cb + ud, uv).
    ///
    /// a·c ≠ 0 since both factors are nonzero; no error case. The b
    /// coordinate is evaluated exactly as written, which keeps the law
    /// exact on small integer parameters.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b, u) = (self.a, self.b, self.u as f64);
        let (c, d, v) = (other.a, other.b, other.u);
        ComplexAuto {
            a: a * c,
            b: c * b + u * d,
            u: self.u * v,
        }
    }

    /// The inverse triple (1/a, −ub/a, u). Always exists; u is unchanged
    /// because each of the two families is a coset of the direct one.
    pub fn invert(&self) -> Self {
        ComplexAuto {
            a: 1.0 / self.a,
            b: -(self.u as f64) * self.b / self.a,
            u: self.u,
        }
    }

    /// Evaluation by polar decomposition: 0 ↦ 0, and otherwise z = rs maps
    /// to r^α·s (u = +1) or r^α·s̄ (u = −1) with r^α = exp(α·ln r).
    ///
    /// 0, 1, −1 are fixed exactly and ±i land exactly on ±i, because the
    /// zero short-circuit and ln 1 = 0 avoid the transcendental path.
    /// Overflow follows IEEE semantics; nothing panics.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        if z.re == 0.0 && z.im == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let r = z.norm();
        let s = z / r;
        let modulus_power = (self.alpha() * r.ln()).exp();
        let phase = if self.u == 1 { s } else { s.conj() };
        modulus_power * phase
    }

    /// Component by (sign a, u); exactly one tag applies.
    pub fn component(&self) -> ComponentTag {
        match (self.a > 0.0, self.u == 1) {
            (true, true) => ComponentTag::PosDirect,
            (false, true) => ComponentTag::NegDirect,
            (true, false) => ComponentTag::PosConjugate,
            (false, false) => ComponentTag::NegConjugate,
        }
    }

    /// Splits f = (a, B, u) uniquely as normal ⋆ complement with the
    /// normal part (1, B/a, u) rotation-like and the complement (a, 0, +1)
    /// in a direct component. Recomposition gives back f: the ⋆ law turns
    /// (1, B/a, u) ⋆ (a, 0, +1) into (a, a·(B/a), u).
    pub fn semidirect_factor(&self) -> (ComplexAuto, ComplexAuto) {
        let normal = ComplexAuto {
            a: 1.0,
            b: self.b / self.a,
            u: self.u,
        };
        let complement = ComplexAuto {
            a: self.a,
            b: 0.0,
            u: 1,
        };
        (normal, complement)
    }

    /// True iff the automorphism multiplies every z by some unit-circle
    /// factor depending only on |z|, which happens exactly when a = 1:
    /// then |f(z)| = |z| and f(z)/z ∈ 𝕊. These form the normal subgroup
    /// that [`ComplexAuto::semidirect_factor`] splits off.
    pub fn is_rotation_like(&self) -> bool {
        self.a == 1.0
    }

    /// True iff f commutes with conjugation, which happens exactly when
    /// b = 0 (α real), for either u: such f map ℝ into ℝ.
    pub fn commutes_with_conjugation(&self) -> bool {
        self.b == 0.0
    }

    /// True iff the restriction to the real axis is increasing: b = 0, so
    /// the restriction is x ↦ x^a, and a > 0. u plays no role because
    /// conjugation fixes ℝ pointwise.
    pub fn is_increasing_on_reals(&self) -> bool {
        self.b == 0.0 && self.a > 0.0
    }
}

impl fmt::Display for ComplexAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.u == 1 { "+1" } else { "-1" };
        write!(f, "({}, {}, {})", self.a, self.b, sign)
    }
}

/// The center of the group: exactly [(1, 0, +1), (−1, 0, −1)]. The second
/// element acts pointwise as z ↦ 1/z (inverted modulus, conjugated phase).
pub fn center() -> [ComplexAuto; 2] {
    [
        ComplexAuto { a: 1.0, b: 0.0, u: 1 },
        ComplexAuto { a: -1.0, b: 0.0, u: -1 },
    ]
}

/// The induced law on the quotient by conjugation, on bare (a, b) pairs:
/// (a, b) ⋆ (c, d) = (ac, cb + d), with identity (1, 0).
pub fn quotient_compose(f: (f64, f64), g: (f64, f64)) -> (f64, f64) {
    (f.0 * g.0, g.0 * f.1 + g.1)
}

/// Inverse for [`quotient_compose`]: (a, b) ↦ (1/a, −b/a).
pub fn quotient_invert(f: (f64, f64)) -> (f64, f64) {
    (1.0 / f.0, -f.1 / f.0)
}

impl Serialize for ComplexAuto {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ComplexAuto", 4)?;
        s.serialize_field("kind", "complex")?;
        s.serialize_field("re_alpha", &self.a)?;
        s.serialize_field("im_alpha", &self.b)?;
        s.serialize_field("conj", &self.u)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct ComplexAutoWire {
    #[serde(default)]
    kind: Option<String>,
    re_alpha: f64,
    im_alpha: f64,
    conj: i8,
}

impl<'de> Deserialize<'de> for ComplexAuto {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = ComplexAutoWire::deserialize(deserializer)?;
        if let Some(kind) = &wire.kind {
            if kind != "complex" {
                return Err(D::Error::custom(format!(
                    "expected kind \"complex\", got \"{kind}\""
                )));
            }
        }
        ComplexAuto::new(wire.re_alpha, wire.im_alpha, wire.conj).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::{within, within_c};
    use proptest::prelude::*;

    fn auto(a: f64, b: f64, u: i8) -> ComplexAuto {
        ComplexAuto::new(a, b, u).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction_guards() {
        assert_eq!(ComplexAuto::new(0.0, 1.0, 1), Err(Error::ZeroRealPart));
        assert_eq!(ComplexAuto::new(-0.0, 1.0, 1), Err(Error::ZeroRealPart));
        assert_eq!(
            ComplexAuto::new(f64::NAN, 0.0, 1),
            Err(Error::NonFinite("re_alpha"))
        );
        assert_eq!(
            ComplexAuto::new(1.0, f64::INFINITY, 1),
            Err(Error::NonFinite("im_alpha"))
        );
        assert_eq!(ComplexAuto::new(1.0, 0.0, 0), Err(Error::InvalidSign(0)));
        assert_eq!(ComplexAuto::new(1.0, 0.0, 2), Err(Error::InvalidSign(2)));
        assert!(ComplexAuto::new(1e-30, 5.0, -1).is_ok());
    }

    #[test]
    fn distinguished_elements() {
        let e = ComplexAuto::identity();
        assert_eq!((e.re_alpha(), e.im_alpha(), e.conj_sign()), (1.0, 0.0, 1));
        assert!(e.is_identity());
        let conj = ComplexAuto::conjugation();
        assert_eq!(
            (conj.re_alpha(), conj.im_alpha(), conj.conj_sign()),
            (1.0, 0.0, -1)
        );
        assert!(conj.compose(&conj).is_identity());
        // conjugation evaluates as expected away from the axes; the polar
        // round trip exp(ln r) costs an ulp, so this is not bit-exact
        assert!(within_c(conj.eval(c(3.0, 4.0)), c(3.0, -4.0), 1e-12));
        assert!(within_c(conj.eval(c(2.0, 0.0)), c(2.0, 0.0), 1e-12));
    }

    #[test]
    fn star_law_frozen_values() {
        let f = auto(2.0, 1.0, 1);
        let g = auto(3.0, 4.0, -1);
        let fg = f.compose(&g);
        assert_eq!((fg.re_alpha(), fg.im_alpha(), fg.conj_sign()), (6.0, 7.0, -1));

        let e = ComplexAuto::identity();
        assert_eq!(f.compose(&e), f);
        assert_eq!(e.compose(&f), f);

        // real parameters multiply like the real family
        let two = auto(2.0, 0.0, 1);
        let three = auto(3.0, 0.0, 1);
        let six = two.compose(&three);
        assert_eq!((six.re_alpha(), six.im_alpha(), six.conj_sign()), (6.0, 0.0, 1));
    }

    #[test]
    fn inverse_frozen_values() {
        assert_eq!(ComplexAuto::identity().invert(), ComplexAuto::identity());
        let f = auto(1.0, 1.0, 1);
        assert_eq!(f.invert(), auto(1.0, -1.0, 1));
        let g = auto(2.0, 4.0, -1);
        assert_eq!(g.invert(), auto(0.5, 2.0, -1));
        // inverse followed by the element is the identity, exactly, on
        // these small integer parameters
        assert!(g.invert().compose(&g).is_identity());
        assert!(f.invert().compose(&f).is_identity());
    }

    #[test]
    fn eval_frozen_values() {
        // (α=2, u=+1) doubles the modulus exponent: 2i ↦ 4i
        let square = auto(2.0, 0.0, 1);
        assert_eq!(square.eval(c(0.0, 2.0)), c(0.0, 4.0));
        assert!(within_c(square.eval(c(3.0, 0.0)), c(9.0, 0.0), 1e-12));

        // (α=1+i, u=+1) at e: e^{1+i} = e·(cos 1 + i sin 1)
        let f = auto(1.0, 1.0, 1);
        let img = f.eval(c(std::f64::consts::E, 0.0));
        let expected = c(
            std::f64::consts::E * 1f64.cos(),
            std::f64::consts::E * 1f64.sin(),
        );
        assert!(within_c(img, expected, 1e-12), "{img} vs {expected}");

        // identity is pointwise identity to tolerance (the polar round
        // trip costs a few ulps off the unit circle)
        let e = ComplexAuto::identity();
        for z in [c(3.0, 4.0), c(-0.5, 0.25), c(1e-3, 2.0), c(700.0, -1e3)] {
            assert!(within_c(e.eval(z), z, 1e-12));
        }
    }

    #[test]
    fn eval_fixes_zero_and_roots_of_unity_exactly() {
        let samples = [
            auto(1.0, 0.0, 1),
            auto(2.0, 3.0, 1),
            auto(-1.5, 0.25, -1),
            auto(7.0, -2.0, -1),
            auto(0.5, 11.0, 1),
        ];
        for f in samples {
            assert_eq!(f.eval(c(0.0, 0.0)), c(0.0, 0.0));
            assert_eq!(f.eval(c(1.0, 0.0)), c(1.0, 0.0));
            assert_eq!(f.eval(c(-1.0, 0.0)), c(-1.0, 0.0));
            let i = c(0.0, 1.0);
            let img_i = f.eval(i);
            let img_neg_i = f.eval(-i);
            if f.conj_sign() == 1 {
                assert_eq!(img_i, i);
                assert_eq!(img_neg_i, -i);
            } else {
                assert_eq!(img_i, -i);
                assert_eq!(img_neg_i, i);
            }
        }
    }

    #[test]
    fn component_frozen_values() {
        assert_eq!(auto(1.0, 0.0, 1).component(), ComponentTag::PosDirect);
        assert_eq!(auto(-2.0, 5.0, 1).component(), ComponentTag::NegDirect);
        assert_eq!(auto(3.0, -1.0, -1).component(), ComponentTag::PosConjugate);
        assert_eq!(auto(-1.0, 4.0, -1).component(), ComponentTag::NegConjugate);
    }

    #[test]
    fn center_commutes_and_noncenter_has_witness() {
        let [e, antipode] = center();
        assert!(e.is_identity());
        assert_eq!(
            (antipode.re_alpha(), antipode.im_alpha(), antipode.conj_sign()),
            (-1.0, 0.0, -1)
        );
        let grid = [
            auto(2.0, 1.0, 1),
            auto(-3.0, 4.0, -1),
            auto(0.5, -2.25, 1),
            auto(-0.125, 0.0, -1),
            auto(7.0, 7.0, 1),
        ];
        for g in center() {
            for h in grid {
                assert_eq!(g.compose(&h), h.compose(&g), "g={g} h={h}");
            }
        }
        // (2, 0, +1) is not central: conjugating family detects it
        let f = auto(2.0, 0.0, 1);
        let h = auto(1.0, 1.0, -1);
        assert_ne!(f.compose(&h), h.compose(&f));
    }

    #[test]
    fn semidirect_frozen_values() {
        let e = ComplexAuto::identity();
        assert_eq!(e.semidirect_factor(), (e, e));

        let f = auto(2.0, 6.0, -1);
        let (n, h) = f.semidirect_factor();
        assert_eq!(n, auto(1.0, 3.0, -1));
        assert_eq!(h, auto(2.0, 0.0, 1));
        assert_eq!(n.compose(&h), f);

        let g = auto(-1.0, 4.0, 1);
        let (n, h) = g.semidirect_factor();
        assert_eq!(n, auto(1.0, -4.0, 1));
        assert_eq!(h, auto(-1.0, 0.0, 1));
        assert_eq!(n.compose(&h), g);
    }

    #[test]
    fn predicate_frozen_values() {
        assert!(auto(1.0, 5.0, -1).is_rotation_like());
        assert!(auto(1.0, 0.0, 1).is_rotation_like());
        assert!(!auto(2.0, 0.0, 1).is_rotation_like());

        assert!(auto(3.0, 0.0, 1).commutes_with_conjugation());
        assert!(auto(1.0, 0.0, -1).commutes_with_conjugation());
        assert!(!auto(1.0, 2.0, 1).commutes_with_conjugation());

        assert!(auto(1.0, 0.0, 1).is_increasing_on_reals());
        assert!(auto(0.5, 0.0, 1).is_increasing_on_reals());
        assert!(auto(2.0, 0.0, -1).is_increasing_on_reals());
        assert!(!auto(-1.0, 0.0, 1).is_increasing_on_reals());
        assert!(!auto(2.0, 1.0, 1).is_increasing_on_reals());
    }

    #[test]
    fn quotient_law_frozen_values() {
        assert_eq!(quotient_compose((1.0, 0.0), (5.0, -2.0)), (5.0, -2.0));
        assert_eq!(quotient_compose((5.0, -2.0), (1.0, 0.0)), (5.0, -2.0));
        assert_eq!(quotient_compose((2.0, 1.0), (3.0, 4.0)), (6.0, 7.0));
        assert_eq!(quotient_invert((2.0, 4.0)), (0.5, -2.0));
        // inverse then element lands on the identity pair exactly for
        // small integer inputs
        let f = (4.0, -6.0);
        assert_eq!(quotient_compose(quotient_invert(f), f), (1.0, 0.0));
    }

    // The quotient law is the full law transferred from the direct (u = +1)
    // family, which is closed under composition.
    #[test]
    fn quotient_law_matches_direct_family() {
        let pairs = [(2.0, 1.0), (3.0, 4.0), (-1.0, 2.0), (0.5, -3.0)];
        for &(a, b) in &pairs {
            for &(cc, d) in &pairs {
                let full = auto(a, b, 1).compose(&auto(cc, d, 1));
                assert_eq!(full.conj_sign(), 1);
                let q = quotient_compose((a, b), (cc, d));
                assert_eq!((full.re_alpha(), full.im_alpha()), q);
            }
            let inv = auto(a, b, 1).invert();
            assert_eq!(
                (inv.re_alpha(), inv.im_alpha()),
                quotient_invert((a, b))
            );
        }
    }

    // The five composition identities relating the direct and conjugating
    // families, first at parameter level (exact on integer parameters),
    // then pointwise at a sample point.
    #[test]
    fn family_mixing_identities() {
        let params = [(2.0, 1.0), (3.0, -4.0), (-1.0, 2.0), (5.0, 0.0)];
        let conj = ComplexAuto::conjugation();
        for &(a, b) in &params {
            let eps = auto(a, b, 1);
            let eps_bar = auto(a, b, -1);
            // ε̄_α = ε_α ∘ ε̄₁
            assert_eq!(eps_bar, eps.compose(&conj));
            // ε̄₁ ∘ ε_α = ε̄_{ᾱ}
            assert_eq!(conj.compose(&eps), auto(a, -b, -1));
            for &(cc, d) in &params {
                let beta = auto(cc, d, 1);
                let beta_bar = auto(cc, d, -1);
                // ε̄_α ∘ ε̄_β = ε_{Re(β)α − iIm(β)}
                assert_eq!(eps_bar.compose(&beta_bar), auto(a * cc, cc * b - d, 1));
                // ε̄_α ∘ ε_β = ε̄_{Re(β)α − iIm(β)}
                assert_eq!(eps_bar.compose(&beta), auto(a * cc, cc * b - d, -1));
                // ε_α ∘ ε̄_β = ε̄_{Re(β)α + iIm(β)}
                assert_eq!(eps.compose(&beta_bar), auto(a * cc, cc * b + d, -1));
            }
        }
        // pointwise spot check of the first two identities
        let z = c(1.75, -0.6);
        for &(a, b) in &params {
            let eps = auto(a, b, 1);
            let eps_bar = auto(a, b, -1);
            assert!(within_c(eps_bar.eval(z), eps.eval(conj.eval(z)), 1e-9));
            assert!(within_c(
                conj.eval(eps.eval(z)),
                auto(a, -b, -1).eval(z),
                1e-9
            ));
        }
    }

    #[test]
    fn positive_reals_stay_real_iff_b_zero() {
        let xs = [0.25, 0.5, 2.0, std::f64::consts::E, 10.0, 317.0];
        for f in [auto(2.0, 0.0, 1), auto(-0.5, 0.0, -1), auto(7.0, 0.0, 1)] {
            for &x in &xs {
                let img = f.eval(c(x, 0.0));
                assert_eq!(img.im, 0.0, "f={f} x={x}");
            }
        }
        for f in [auto(1.0, 0.5, 1), auto(2.0, -1.0, -1), auto(0.5, 3.0, 1)] {
            let escaped = xs
                .iter()
                .any(|&x| f.eval(c(x, 0.0)).im.abs() >= 1e-6);
            assert!(escaped, "f={f} kept all sampled positives real");
        }
    }

    fn sign_strategy() -> impl Strategy<Value = i8> {
        prop_oneof![Just(1i8), Just(-1i8)]
    }

    fn a_strategy() -> impl Strategy<Value = f64> {
        (0.1f64..4.0, any::<bool>()).prop_map(|(m, neg)| if neg { -m } else { m })
    }

    fn z_strategy() -> impl Strategy<Value = Complex64> {
        (1e-3f64..1e3, -std::f64::consts::PI..std::f64::consts::PI)
            .prop_map(|(r, theta)| Complex64::from_polar(r, theta))
    }

    fn integer_auto_strategy() -> impl Strategy<Value = ComplexAuto> {
        (1i32..=8, any::<bool>(), -8i32..=8, sign_strategy()).prop_map(|(a, neg, b, u)| {
            let a = if neg { -a } else { a };
            ComplexAuto::new(a as f64, b as f64, u).unwrap()
        })
    }

    proptest! {
        #[test]
        fn star_is_associative_bit_exact_on_integer_parameters(
            f in integer_auto_strategy(),
            g in integer_auto_strategy(),
            h in integer_auto_strategy(),
        ) {
            prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        }

        #[test]
        fn inverse_then_element_is_identity_on_integer_parameters(
            f in integer_auto_strategy(),
        ) {
            prop_assert!(f.invert().compose(&f).is_identity());
            // the opposite order is exact in the a and u coordinates and
            // within one rounding of zero in b
            let other = f.compose(&f.invert());
            prop_assert_eq!(other.re_alpha(), 1.0);
            prop_assert_eq!(other.conj_sign(), 1);
            prop_assert!(within(other.im_alpha(), 0.0, 1e-12));
        }

        #[test]
        fn center_commutes_bit_exact(
            h in (a_strategy(), -4.0f64..4.0, sign_strategy())
                .prop_map(|(a, b, u)| ComplexAuto::new(a, b, u).unwrap()),
        ) {
            for g in center() {
                prop_assert_eq!(g.compose(&h), h.compose(&g));
            }
        }

        #[test]
        fn theta_is_a_homomorphism(
            f in (a_strategy(), -4.0f64..4.0, sign_strategy())
                .prop_map(|(a, b, u)| ComplexAuto::new(a, b, u).unwrap()),
            g in (a_strategy(), -4.0f64..4.0, sign_strategy())
                .prop_map(|(a, b, u)| ComplexAuto::new(a, b, u).unwrap()),
            z in z_strategy(),
        ) {
            let via_star = f.compose(&g).eval(z);
            let via_eval = f.eval(g.eval(z));
            prop_assert!(
                within_c(via_star, via_eval, 1e-9),
                "{} vs {}", via_star, via_eval
            );
        }

        #[test]
        fn eval_is_multiplicative(
            f in (a_strategy(), -4.0f64..4.0, sign_strategy())
                .prop_map(|(a, b, u)| ComplexAuto::new(a, b, u).unwrap()),
            z in z_strategy(),
            w in z_strategy(),
        ) {
            let lhs = f.eval(z * w);
            let rhs = f.eval(z) * f.eval(w);
            prop_assert!(within_c(lhs, rhs, 1e-9), "{} vs {}", lhs, rhs);
        }

        #[test]
        fn modulus_law(
            f in (a_strategy(), -4.0f64..4.0, sign_strategy())
                .prop_map(|(a, b, u)| ComplexAuto::new(a, b, u).unwrap()),
            z in z_strategy(),
        ) {
            let img = f.eval(z);
            prop_assert!(within(img.norm(), z.norm().powf(f.re_alpha()), 1e-9));
        }

        #[test]
        fn unit_circle_maps_into_unit_circle(
            f in (a_strategy(), -4.0f64..4.0, sign_strategy())
                .prop_map(|(a, b, u)| ComplexAuto::new(a, b, u).unwrap()),
            theta in -std::f64::consts::PI..std::f64::consts::PI,
        ) {
            let z = Complex64::from_polar(1.0, theta);
            prop_assert!(within(f.eval(z).norm(), 1.0, 1e-9));
        }

        #[test]
        fn rotation_like_subgroup_is_normal(
            g in integer_auto_strategy(),
            b in -4.0f64..4.0,
            u in sign_strategy(),
        ) {
            let n = ComplexAuto::new(1.0, b, u).unwrap();
            let conjugated = g.invert().compose(&n).compose(&g);
            prop_assert!(conjugated.is_rotation_like());
        }

        #[test]
        fn semidirect_recomposition_is_exact_on_integer_parameters(
            f in integer_auto_strategy(),
        ) {
            let (n, h) = f.semidirect_factor();
            prop_assert!(n.is_rotation_like());
            prop_assert!(matches!(
                h.component(),
                ComponentTag::PosDirect | ComponentTag::NegDirect
            ));
            prop_assert_eq!(h.im_alpha(), 0.0);
            prop_assert_eq!(h.conj_sign(), 1);
            prop_assert_eq!(n.compose(&h), f);
        }
    }

    #[test]
    fn json_shape_and_validation() {
        let f = auto(6.0, 7.0, -1);
        let json = serde_json::to_value(f).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"kind": "complex", "re_alpha": 6.0, "im_alpha": 7.0, "conj": -1})
        );
        let back: ComplexAuto = serde_json::from_value(json).unwrap();
        assert_eq!(back, f);

        let bare: ComplexAuto =
            serde_json::from_str(r#"{"re_alpha": 2.0, "im_alpha": 1.0, "conj": 1}"#).unwrap();
        assert_eq!(bare, auto(2.0, 1.0, 1));

        assert!(serde_json::from_str::<ComplexAuto>(
            r#"{"kind": "real", "re_alpha": 2.0, "im_alpha": 1.0, "conj": 1}"#
        )
        .is_err());
        assert!(serde_json::from_str::<ComplexAuto>(
            r#"{"re_alpha": 0.0, "im_alpha": 1.0, "conj": 1}"#
        )
        .is_err());
        assert!(serde_json::from_str::<ComplexAuto>(
            r#"{"re_alpha": 1.0, "im_alpha": 1.0, "conj": 3}"#
        )
        .is_err());
    }
}
