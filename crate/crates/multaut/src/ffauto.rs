//! Multiplicative automorphisms of a finite field.
//!
//! Every bijection of 𝔽_q that fixes 0 and preserves products is a power
//! map x ↦ x^α: the unit group is cyclic, so a multiplicative automorphism
//! is determined by where it sends a generator, and bijectivity forces
//! gcd(α, q − 1) = 1. Composition multiplies exponents mod q − 1, which
//! identifies the whole group with U_{q−1}, of size φ(q − 1).
//!
//! Inside it sits the Frobenius subgroup {x ↦ x^{p^j}}: exactly the power
//! maps that also respect addition, i.e. the classical field automorphisms.
//! [`is_multiplicative_automorphism`] is the brute-force counterpart: it
//! checks an explicit function table against the definition, with no power
//! map assumption, and is used to cross-validate the enumeration.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::ff::{FieldElement, FiniteField};
use crate::nt;
use crate::Error;

/// The multiplicative automorphism x ↦ x^exponent of a finite field, with
/// the exponent normalized into [1, q − 1] and coprime to q − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerAutomorphism {
    field: FiniteField,
    exponent: u64,
}

/// exponent mod m pushed into the canonical window [1, m].
fn normalize_exponent(alpha: i64, m: u64) -> u64 {
    let r = alpha.rem_euclid(m as i64) as u64;
    if r == 0 {
        m
    } else {
        r
    }
}

impl PowerAutomorphism {
    /// Builds x ↦ x^alpha. The exponent is reduced mod q − 1 into
    /// [1, q − 1]; construction fails unless gcd(alpha, q − 1) = 1, since
    /// otherwise the power map is not injective on units.
    pub fn new(field: &FiniteField, alpha: i64) -> Result<Self, Error> {
        let m = field.order() - 1;
        let exponent = normalize_exponent(alpha, m);
        if nt::gcd(exponent, m) != 1 {
            return Err(Error::NotAUnit {
                exponent: alpha,
                modulus: m,
            });
        }
        Ok(PowerAutomorphism {
            field: field.clone(),
            exponent,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// The normalized exponent in [1, q − 1].
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 1
    }

    /// x^α. Sends 0 to 0 because 0^α = 0 for every α ≥ 1.
    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement, Error> {
        if *x.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(x.pow(self.exponent))
    }

    /// self ∘ other (other applied first). Exponents multiply mod q − 1.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let m = self.field.order() - 1;
        let exponent =
            normalize_exponent((self.exponent as u128 * other.exponent as u128 % m as u128) as i64, m);
        Ok(PowerAutomorphism {
            field: self.field.clone(),
            exponent,
        })
    }

    /// The inverse automorphism: exponent = α⁻¹ mod q − 1. Always exists
    /// because the exponent is a unit.
    pub fn invert(&self) -> Self {
        let m = self.field.order() - 1;
        let inv = nt::mod_inverse(self.exponent, m).expect("the exponent is a unit mod q-1");
        PowerAutomorphism {
            field: self.field.clone(),
            exponent: normalize_exponent(inv as i64, m),
        }
    }
}

impl fmt::Display for PowerAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} on {}", self.exponent, self.field)
    }
}

/// All multiplicative automorphisms of the field, ascending by exponent.
/// The list has length φ(q − 1); for 𝔽₂ it is just the identity.
pub fn multiplicative_automorphisms(field: &FiniteField) -> Vec<PowerAutomorphism> {
    let m = field.order() - 1;
    (1..=m)
        .filter(|&k| nt::gcd(k, m) == 1)
        .map(|k| PowerAutomorphism {
            field: field.clone(),
            exponent: k,
        })
        .collect()
}

/// The subgroup of power maps that are honest field automorphisms: the
/// powers of Frobenius, x ↦ x^{p^j} for j = 0, …, n − 1, in that order.
/// Its size is the extension degree n; on a prime field it is {identity}.
pub fn frobenius_subgroup(field: &FiniteField) -> Vec<PowerAutomorphism> {
    let p = field.characteristic();
    let m = field.order() - 1;
    (0..field.degree())
        .map(|j| PowerAutomorphism {
            field: field.clone(),
            exponent: normalize_exponent(nt::mod_pow(p, j as u64, m) as i64, m),
        })
        .collect()
}

/// Checks an explicit function table against the definition of a
/// multiplicative automorphism: fixes 0, bijective, f(xy) = f(x)f(y) for
/// all q² pairs. `table[k]` is the image of the k-th element in canonical
/// order. Exhaustive, no structure assumed.
pub fn is_multiplicative_automorphism(
    field: &FiniteField,
    table: &[FieldElement],
) -> Result<bool, Error> {
    let q = field.order();
    if table.len() as u64 != q {
        return Err(Error::MalformedTable(format!(
            "expected {q} entries, got {}",
            table.len()
        )));
    }
    for (k, image) in table.iter().enumerate() {
        if image.field() != field {
            return Err(Error::MalformedTable(format!(
                "entry {k} belongs to a different field"
            )));
        }
    }
    if !table[0].is_zero() {
        return Ok(false);
    }
    let mut seen = vec![false; q as usize];
    for image in table {
        let idx = image.index() as usize;
        if seen[idx] {
            return Ok(false);
        }
        seen[idx] = true;
    }
    let at = |x: &FieldElement| table[x.index() as usize].clone();
    for a in field.elements() {
        for b in field.elements() {
            let lhs = at(&a.mul(&b).expect("same field"));
            let rhs = at(&a).mul(&at(&b)).expect("same field");
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct PowerAutoWire {
    field: FiniteField,
    exponent: i64,
}

impl Serialize for PowerAutomorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PowerAutoWire {
            field: self.field.clone(),
            exponent: self.exponent as i64,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerAutomorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = PowerAutoWire::deserialize(deserializer)?;
        PowerAutomorphism::new(&wire.field, wire.exponent).map_err(D::Error::custom)
    }
}
