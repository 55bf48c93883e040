//! JSON argument decoding for the command line.
//!
//! Structural problems (bad JSON, missing or unknown fields, a "kind" tag
//! for a different family) are usage errors. Values the library rejects
//! (alpha on the imaginary axis, a sign flag other than 1 or -1) are
//! domain errors and keep their library error names. check-hom is the
//! exception: its contract folds every spec problem into MalformedSpec.

use multaut::{ComplexAdditiveAuto, ComplexAuto, Error, LatticeFixingAdditiveAuto, RealAuto};
use num_complex::Complex64;
use serde::Deserialize;

/// How a command failed: usage errors exit 2, domain errors exit 1.
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Domain(err)
    }
}

pub fn real_exponent(text: &str) -> Result<f64, Failure> {
    text.trim()
        .parse()
        .map_err(|err| Failure::Usage(format!("invalid exponent {text:?}: {err}")))
}

pub fn sign_flag(value: i64) -> Result<i8, Failure> {
    match value {
        1 => Ok(1),
        -1 => Ok(-1),
        other => Err(Failure::Domain(Error::InvalidSign(other))),
    }
}

fn expect_kind(kind: Option<&str>, want: &str) -> Result<(), Failure> {
    match kind {
        Some(k) if k != want => Err(Failure::Usage(format!(
            "kind {k:?} where a {want:?} map was expected"
        ))),
        _ => Ok(()),
    }
}

fn bad_json(what: &str, err: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid {what} JSON: {err}"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexWire {
    kind: Option<String>,
    re_alpha: f64,
    im_alpha: f64,
    conj: i64,
}

pub fn complex_auto(text: &str) -> Result<ComplexAuto, Failure> {
    let w: ComplexWire =
        serde_json::from_str(text).map_err(|e| bad_json("complex automorphism", e))?;
    expect_kind(w.kind.as_deref(), "complex")?;
    Ok(ComplexAuto::new(w.re_alpha, w.im_alpha, sign_flag(w.conj)?)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeWire {
    kind: Option<String>,
    eta: i64,
    alpha_re: f64,
    alpha_im: f64,
}

fn lattice_from_wire(w: LatticeWire) -> Result<LatticeFixingAdditiveAuto, Failure> {
    expect_kind(w.kind.as_deref(), "additive-lattice")?;
    Ok(LatticeFixingAdditiveAuto::new(
        sign_flag(w.eta)?,
        Complex64::new(w.alpha_re, w.alpha_im),
    )?)
}

pub fn lattice_auto(text: &str) -> Result<LatticeFixingAdditiveAuto, Failure> {
    let w: LatticeWire =
        serde_json::from_str(text).map_err(|e| bad_json("lattice-fixing additive", e))?;
    lattice_from_wire(w)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AdditiveWire {
    kind: Option<String>,
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
}

pub enum AdditiveMap {
    General(ComplexAdditiveAuto),
    Lattice(LatticeFixingAdditiveAuto),
}

/// Accepts either the general alpha/beta form or, when an "eta" field is
/// present, the lattice-fixing eta/alpha form.
pub fn additive_map(text: &str) -> Result<AdditiveMap, Failure> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| bad_json("additive map", e))?;
    if value.get("eta").is_some() {
        let w: LatticeWire =
            serde_json::from_value(value).map_err(|e| bad_json("lattice-fixing additive", e))?;
        Ok(AdditiveMap::Lattice(lattice_from_wire(w)?))
    } else {
        let w: AdditiveWire =
            serde_json::from_value(value).map_err(|e| bad_json("additive map", e))?;
        expect_kind(w.kind.as_deref(), "additive")?;
        Ok(AdditiveMap::General(ComplexAdditiveAuto::new(
            Complex64::new(w.alpha_re, w.alpha_im),
            Complex64::new(w.beta_re, w.beta_im),
        )?))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RealWire {
    // present so deny_unknown_fields tolerates the tag; validated upstream
    #[serde(rename = "kind")]
    _kind: Option<String>,
    alpha: f64,
}

pub enum HomSubject {
    Real(RealAuto),
    Complex(ComplexAuto),
}

pub fn hom_subject(text: &str) -> Result<HomSubject, Failure> {
    hom_subject_inner(text).map_err(|why| Failure::Domain(Error::MalformedSpec(why)))
}

fn hom_subject_inner(text: &str) -> Result<HomSubject, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let kind = value
        .get("kind")
        .and_then(serde_json::Value::as_str)
        .ok_or_else(|| "missing \"kind\" tag".to_string())?
        .to_owned();
    match kind.as_str() {
        "real" => {
            let w: RealWire = serde_json::from_value(value).map_err(|e| e.to_string())?;
            Ok(HomSubject::Real(
                RealAuto::new(w.alpha).map_err(|e| e.to_string())?,
            ))
        }
        "complex" => {
            let w: ComplexWire = serde_json::from_value(value).map_err(|e| e.to_string())?;
            let u = match w.conj {
                1 => 1i8,
                -1 => -1,
                other => return Err(Error::InvalidSign(other).to_string()),
            };
            Ok(HomSubject::Complex(
                ComplexAuto::new(w.re_alpha, w.im_alpha, u).map_err(|e| e.to_string())?,
            ))
        }
        other => Err(format!("unknown kind {other:?}")),
    }
}
