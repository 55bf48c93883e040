use std::fmt;

/// Everything that can go wrong across the crate. Constructors validate
/// their invariants eagerly, so operations downstream of a successful
/// construction mostly cannot fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic handed to a field constructor is composite (or < 2).
    NotPrime(u64),
    /// The requested extension degree is 0 or puts p^n past the 2^16 cap.
    DegreeTooLarge { p: u64, n: u32 },
    /// Two elements (or an automorphism and an element) belong to different fields.
    FieldMismatch,
    /// Multiplicative inverse of the zero element.
    DivisionByZero,
    /// The value shares a factor with the modulus, so it has no inverse.
    NotCoprime { value: u64, modulus: u64 },
    /// The exponent is not invertible mod q−1, so x ↦ x^α is not bijective.
    NotAUnit { exponent: i64, modulus: u64 },
    /// A function table has the wrong length or contains foreign elements.
    MalformedTable(String),
    /// A modulus polynomial that is not monic of the right degree, has
    /// out-of-range coefficients, or is reducible.
    InvalidModulus(String),
    /// α = 0 defines the constant map, not an automorphism.
    ZeroExponent,
    /// A real parameter that must be finite is NaN or infinite.
    NonFinite(&'static str),
    /// Re(α) = 0: the exponent lies on the excluded imaginary axis.
    ZeroRealPart,
    /// A sign parameter outside {−1, +1}.
    InvalidSign(i64),
    /// (α, β) with Re(α)Im(β) − Im(α)Re(β) = 0 is not an ℝ-basis of ℂ.
    InvalidBasis,
    /// Logarithm of zero.
    LogOfZero,
    /// An automorphism description (JSON or flags) that does not parse or
    /// violates a construction invariant.
    MalformedSpec(String),
}

impl Error {
    /// Stable machine-readable variant name, used by the CLI error channel.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::FieldMismatch => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NotAUnit { .. } => "NotAUnit",
            Error::MalformedTable(_) => "MalformedTable",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::ZeroExponent => "ZeroExponent",
            Error::NonFinite(_) => "NonFinite",
            Error::ZeroRealPart => "ZeroRealPart",
            Error::InvalidSign(_) => "InvalidSign",
            Error::InvalidBasis => "InvalidBasis",
            Error::LogOfZero => "LogOfZero",
            Error::MalformedSpec(_) => "MalformedSpec",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DegreeTooLarge { p, n } => {
                write!(f, "degree {n} is out of range for p = {p} (need n >= 1 and p^n <= 65536)")
            }
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::DivisionByZero => write!(f, "the zero element has no inverse"),
            Error::NotCoprime { value, modulus } => {
                write!(f, "{value} shares a factor with {modulus}")
            }
            Error::NotAUnit { exponent, modulus } => {
                write!(f, "exponent {exponent} is not a unit modulo {modulus}")
            }
            Error::MalformedTable(why) => write!(f, "malformed table: {why}"),
            Error::InvalidModulus(why) => write!(f, "invalid modulus: {why}"),
            Error::ZeroExponent => write!(f, "exponent 0 does not define an automorphism"),
            Error::NonFinite(what) => write!(f, "{what} must be finite"),
            Error::ZeroRealPart => write!(f, "Re(alpha) must be nonzero"),
            Error::InvalidSign(s) => write!(f, "sign must be -1 or 1, got {s}"),
            Error::InvalidBasis => write!(f, "(alpha, beta) is not a basis: determinant is zero"),
            Error::LogOfZero => write!(f, "logarithm of zero"),
            Error::MalformedSpec(why) => write!(f, "malformed automorphism spec: {why}"),
        }
    }
}

impl std::error::Error for Error {}
