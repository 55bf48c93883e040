//! Finite fields at desk scale.
//!
//! 𝔽_{p^n} is represented as the residue ring ℤ_p[x]/(m(x)) for a fixed monic
//! irreducible modulus m of degree n. Polynomials are coefficient vectors
//! with the constant term first. Construction is deterministic: the modulus
//! is the first irreducible polynomial in the canonical candidate order, so
//! two fields built from the same (p, n) are identical, element by element.
//!
//! The canonical order on elements reads an index k ∈ [0, q) in base p,
//! least-significant digit = constant term. `element(3)` of 𝔽₈ is therefore
//! x + 1, and enumeration, primitive-element selection, and function tables
//! all share this single ordering.
//!
//! Everything is immutable after construction; the field handle is a cheap
//! reference-counted clone, so elements can carry their field around without
//! copying the modulus.

use std::fmt;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::nt;
use crate::Error;

/// Desk-scale cap: constructors reject q = p^n above this.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug)]
struct Repr {
    p: u64,
    n: u32,
    q: u64,
    /// Monic, degree n, constant term first; length n + 1.
    modulus: Vec<u64>,
}

/// The finite field 𝔽_{p^n}. Cheap to clone and share.
#[derive(Clone, Debug)]
pub struct FiniteField(Arc<Repr>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.n == other.0.n
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

/// An element of a [`FiniteField`]: a residue represented by its unique
/// coefficient vector of length n with entries in [0, p).
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: FiniteField,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl FiniteField {
    /// Builds 𝔽_{p^n} with the canonically smallest irreducible modulus:
    /// candidates x^n + c_{n−1}x^{n−1} + … + c_0 are scanned by ascending
    /// integer value c_0 + c_1·p + … + c_{n−1}·p^{n−1} and the first
    /// irreducible one wins. Deterministic and reproducible.
    pub fn new(p: u64, n: u32) -> Result<Self, Error> {
        let q = checked_order(p, n)?;
        for k in 0..q {
            let mut modulus = digits(k, p, n as usize);
            modulus.push(1);
            if is_irreducible(&modulus, p) {
                return Ok(FiniteField(Arc::new(Repr { p, n, q, modulus })));
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over Z_p")
    }

    /// Builds a field with an explicitly given monic irreducible modulus
    /// (constant term first). Any valid presentation is accepted; fields
    /// with different moduli are distinct and their elements do not mix.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, Error> {
        if !nt::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let n = (modulus.len() - 1) as u32;
        let q = checked_order(p, n)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("polynomial must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidModulus(format!(
                "{} is reducible over Z_{p}",
                poly_to_string(&modulus)
            )));
        }
        Ok(FiniteField(Arc::new(Repr { p, n, q, modulus })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Extension degree n.
    pub fn degree(&self) -> u32 {
        self.0.n
    }

    /// Number of elements q = p^n.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// The modulus polynomial, constant term first (length n + 1, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// The k-th element in canonical order: k written in base p, constant
    /// term = least significant digit. Panics if k ≥ q.
    pub fn element(&self, k: u64) -> FieldElement {
        assert!(
            k < self.0.q,
            "element index {k} out of range for a field of order {}",
            self.0.q
        );
        FieldElement {
            field: self.clone(),
            coeffs: digits(k, self.0.p, self.0.n as usize),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element from an arbitrary coefficient list (constant term first).
    /// Coefficients are reduced mod p and the polynomial mod the modulus,
    /// so any length is accepted.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let p = self.0.p;
        let reduced: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
        let (_, mut rem) = poly_divrem(&reduced, &self.0.modulus, p);
        rem.resize(self.0.n as usize, 0);
        FieldElement {
            field: self.clone(),
            coeffs: rem,
        }
    }

    /// All q elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |k| self.element(k))
    }

    /// The first element in canonical order whose multiplicative order is
    /// q − 1, i.e. the canonical generator of the (cyclic) unit group.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.0.q - 1;
        self.elements()
            .find(|e| e.multiplicative_order() == Some(target))
            .expect("the unit group of a finite field is cyclic")
    }
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Coefficients, constant term first; length n, entries in [0, p).
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Position in the canonical enumeration: Σ coeffs[i]·p^i.
    pub fn index(&self) -> u64 {
        let p = self.field.0.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, other: &Self) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_field(other)?;
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_field(other)?;
        let p = self.field.0.p;
        let product = poly_mul(&self.coeffs, &other.coeffs, p);
        let (_, mut rem) = poly_divrem(&product, &self.field.0.modulus, p);
        rem.resize(self.field.0.n as usize, 0);
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: rem,
        })
    }

    /// e-th power by square-and-multiply; `pow(0)` is 1, including for 0.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via extended Euclid on polynomials.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.0.p;
        let inv = poly_inverse_mod(&self.coeffs, &self.field.0.modulus, p)
            .expect("nonzero residues are invertible modulo an irreducible polynomial");
        let mut coeffs = inv;
        coeffs.resize(self.field.0.n as usize, 0);
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Order in the unit group, or None for the zero element. Computed by
    /// refining q − 1 through its prime factors, so it never loops q times.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut d = self.field.0.q - 1;
        if d == 0 {
            unreachable!("q >= 2");
        }
        for (l, _) in nt::factorize(d) {
            while d % l == 0 && self.pow(d / l).is_one() {
                d /= l;
            }
        }
        Some(d)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_to_string(&self.coeffs))
    }
}

fn checked_order(p: u64, n: u32) -> Result<u64, Error> {
    if !nt::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::DegreeTooLarge { p, n });
    }
    match p.checked_pow(n) {
        Some(q) if q <= MAX_FIELD_ORDER => Ok(q),
        _ => Err(Error::DegreeTooLarge { p, n }),
    }
}

/// k in base p, least significant digit first, padded to length n.
fn digits(mut k: u64, p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0; n];
    for slot in out.iter_mut() {
        *slot = k % p;
        k /= p;
    }
    debug_assert_eq!(k, 0);
    out
}

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Long division: a = q·b + r with deg r < deg b. b must be nonzero.
fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = poly_degree(b).expect("division by the zero polynomial");
    let lead_inv = nt::mod_inverse(b[db], p).expect("p is prime and the leading term is nonzero");
    let mut rem: Vec<u64> = a.to_vec();
    let mut quot = vec![0u64; a.len().saturating_sub(db)];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let factor = rem[dr] * lead_inv % p;
        let shift = dr - db;
        quot[shift] = factor;
        for (i, &bi) in b.iter().enumerate().take(db + 1) {
            let sub = factor * bi % p;
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
    (quot, rem)
}

/// True iff the monic polynomial (constant term first) has no monic factor
/// of degree 1..⌊deg/2⌋; linear polynomials are always irreducible.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let n = poly.len() - 1;
    debug_assert_eq!(poly[n], 1);
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut divisor = digits(k, p, d);
            divisor.push(1);
            let (_, rem) = poly_divrem(poly, &divisor, p);
            if rem.is_empty() {
                return false;
            }
        }
    }
    true
}

/// s with s·a ≡ 1 (mod m) over Z_p, or None when gcd(a, m) is not constant.
fn poly_inverse_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // extended Euclid on (m, a), tracking only the coefficient of a
    let mut r0: Vec<u64> = m.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    while r1.last() == Some(&0) {
        r1.pop();
    }
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let qs1 = poly_mul(&q, &s1, p);
        let mut s2 = poly_sub(&s0, &qs1, p);
        while s2.last() == Some(&0) {
            s2.pop();
        }
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    match poly_degree(&r0) {
        Some(0) => {
            let scale = nt::mod_inverse(r0[0], p).expect("p is prime");
            let mut out: Vec<u64> = s0.iter().map(|&c| c * scale % p).collect();
            let (_, mut rem) = poly_divrem(&out, m, p);
            out.clear();
            out.append(&mut rem);
            Some(out)
        }
        _ => None,
    }
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let ai = a.get(i).copied().unwrap_or(0);
            let bi = b.get(i).copied().unwrap_or(0);
            (ai + p - bi) % p
        })
        .collect()
}

fn poly_to_string(coeffs: &[u64]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match i {
            0 => c.to_string(),
            1 if c == 1 => "x".into(),
            1 => format!("{c}x"),
            _ if c == 1 => format!("x^{i}"),
            _ => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Serialize, Deserialize)]
struct FieldWire {
    p: u64,
    n: u32,
    modulus: Vec<u64>,
}

impl Serialize for FiniteField {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FieldWire {
            p: self.0.p,
            n: self.0.n,
            modulus: self.0.modulus.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = FieldWire::deserialize(deserializer)?;
        let field = FiniteField::with_modulus(wire.p, wire.modulus).map_err(D::Error::custom)?;
        if field.degree() != wire.n {
            return Err(D::Error::custom(format!(
                "declared degree {} does not match a modulus of degree {}",
                wire.n,
                field.degree()
            )));
        }
        Ok(field)
    }
}

#[derive(Serialize)]
struct ElementWire<'a> {
    coeffs: &'a [u64],
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementWire {
            coeffs: &self.coeffs,
        }
        .serialize(serializer)
    }
}
