//! JSON documents exchanged on the command line.
//!
//! Rationals are strings `"n"` or `"n/d"`. An element of a number field
//! `Q[t]/(m)` is the array of its coefficients in `t` (constant first), with
//! `m` given once in the enclosing document as `"modulus"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use ratmap_core::git::{StabilityClass, Witness};
use ratmap_core::milnor2::ModuliPoint;
use ratmap_core::poly::{rational_coeff_strings, BinaryForm, Poly};
use ratmap_core::ratmap::{ProjectivePoint, RationalMap, RationalMapPoint};
use ratmap_core::scalar::{format_rational, parse_rational};
use ratmap_core::spectrum::MultiplierSpectrum;
use ratmap_core::{Error, ExtElem, Rational, Result, Scalar};

/// A rational map or a point of `P^{2d+1}`: `F_a = Σ aᵢ X^{d−i} Yⁱ`,
/// `F_b = Σ bᵢ X^{d−i} Yⁱ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    pub d: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl MapJson {
    pub fn from_point(p: &RationalMapPoint<Rational>) -> Self {
        MapJson { d: p.degree(), a: strings(p.a().coeffs()), b: strings(p.b().coeffs()) }
    }

    pub fn from_map(m: &RationalMap<Rational>) -> Self {
        Self::from_point(m.point())
    }

    pub fn to_point(&self) -> Result<RationalMapPoint<Rational>> {
        if self.a.len() != self.d + 1 || self.b.len() != self.d + 1 {
            return Err(Error::Invalid(format!("expected {} coefficients per form", self.d + 1)));
        }
        RationalMapPoint::new(BinaryForm::new(parse_all(&self.a)?), BinaryForm::new(parse_all(&self.b)?))
    }

    pub fn to_map(&self) -> Result<RationalMap<Rational>> {
        RationalMap::new(self.to_point()?)
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s.trim())).collect()
}

/// Read a map argument: a path to a JSON file holding a [`MapJson`], or
/// the inline form `"a0,…,ad;b0,…,bd"`.
pub fn read_point(arg: &str) -> Result<RationalMapPoint<Rational>> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Invalid(format!("{arg}: {e}")))?;
        let doc: MapJson = serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{arg}: {e}")))?;
        return doc.to_point();
    }
    let (a, b) = arg
        .split_once(';')
        .ok_or_else(|| Error::Invalid(format!("{arg:?} is neither a file nor \"a0,…,ad;b0,…,bd\"")))?;
    let split = |s: &str| -> Vec<String> { s.split(',').map(|x| x.trim().to_string()).collect() };
    let (a, b) = (split(a), split(b));
    if a.len() < 2 {
        return Err(Error::Invalid("a map needs degree at least 1".into()));
    }
    MapJson { d: a.len() - 1, a, b }.to_point()
}

/// A possibly irrational number: a rational string, or coefficients in the
/// field generator `t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExtValue {
    Rational(String),
    Algebraic(Vec<String>),
}

impl ExtValue {
    pub fn from_elem(x: &ExtElem) -> Self {
        match x.to_rational() {
            Some(q) => ExtValue::Rational(format_rational(&q)),
            None => ExtValue::Algebraic(rational_coeff_strings(x.poly())),
        }
    }

    /// Interpret in the field with the given modulus.
    pub fn to_elem(&self, modulus: Option<&Poly<Rational>>) -> Result<ExtElem> {
        match self {
            ExtValue::Rational(s) => Ok(ExtElem::rational(parse_rational(s)?)),
            ExtValue::Algebraic(cs) => {
                let m = modulus.ok_or_else(|| Error::Invalid("algebraic value without a modulus".into()))?;
                let field = ratmap_core::scalar::ExtensionField::new(m)?;
                Ok(field.element(Poly::new(parse_all(cs)?)))
            }
        }
    }
}

fn modulus_of<'a>(xs: impl IntoIterator<Item = &'a ExtElem>) -> Option<Vec<String>> {
    xs.into_iter().find_map(|x| x.field().map(|f| rational_coeff_strings(f.modulus())))
}

/// A map whose coefficients may lie in a number field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtMapJson {
    pub d: usize,
    pub a: Vec<ExtValue>,
    pub b: Vec<ExtValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<String>>,
}

impl ExtMapJson {
    pub fn from_map(m: &RationalMap<ExtElem>) -> Self {
        let coeffs = m.point().coefficients();
        ExtMapJson {
            d: m.degree(),
            a: m.a().coeffs().iter().map(ExtValue::from_elem).collect(),
            b: m.b().coeffs().iter().map(ExtValue::from_elem).collect(),
            modulus: modulus_of(&coeffs),
        }
    }

    pub fn to_map(&self) -> Result<RationalMap<ExtElem>> {
        let m = self.modulus.as_ref().map(|m| parse_all(m).map(Poly::new)).transpose()?;
        let conv = |v: &[ExtValue]| v.iter().map(|x| x.to_elem(m.as_ref())).collect::<Result<Vec<_>>>();
        RationalMap::from_forms(BinaryForm::new(conv(&self.a)?), BinaryForm::new(conv(&self.b)?))
    }
}

/// Multiplier spectrum `σ₁ … σ_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: u32,
    pub convention: String,
    pub sigma: Vec<String>,
    pub squarefree: bool,
}

impl SpectrumJson {
    pub fn from_spectrum(s: &MultiplierSpectrum) -> Self {
        SpectrumJson {
            n: s.n,
            convention: s.convention.as_str().to_string(),
            sigma: strings(&s.sigma),
            squarefree: s.squarefree,
        }
    }
}

/// A point `[x : y]` of `P¹`, coordinates possibly algebraic.
pub fn point_json(p: &ProjectivePoint<ExtElem>) -> [ExtValue; 2] {
    let (x, y) = p.coords();
    [ExtValue::from_elem(x), ExtValue::from_elem(y)]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub test: String,
    pub p: [ExtValue; 2],
    pub q: [ExtValue; 2],
    pub mult_h_q: usize,
    pub mult_h_p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<String>>,
}

impl WitnessJson {
    pub fn from_witness(w: &Witness) -> Self {
        WitnessJson {
            test: match w.strictness {
                ratmap_core::git::Strictness::UnstableTest => "unstable".into(),
                ratmap_core::git::Strictness::NotStableTest => "not-stable".into(),
            },
            p: point_json(&w.p),
            q: point_json(&w.q),
            mult_h_q: w.mult_h_q,
            mult_h_p: w.mult_h_p,
            modulus: w.modulus.as_ref().map(rational_coeff_strings),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityJson {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl StabilityJson {
    pub fn from_class(c: &StabilityClass) -> Self {
        StabilityJson {
            verdict: c.verdict.as_str().to_string(),
            witness: c.witness.as_ref().map(WitnessJson::from_witness),
        }
    }
}

/// `[x₀ : x₁ : x₂]` of the moduli plane.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuliJson {
    pub coordinates: [String; 3],
    pub boundary: bool,
}

impl ModuliJson {
    pub fn from_point(m: &ModuliPoint) -> Self {
        let [x0, x1, x2] = m.coordinates();
        ModuliJson {
            coordinates: [format_rational(&x0), format_rational(&x1), format_rational(&x2)],
            boundary: m.is_boundary(),
        }
    }

    pub fn to_point(&self) -> Result<ModuliPoint> {
        let [x0, x1, x2] = &self.coordinates;
        ModuliPoint::projective(&parse_rational(x0)?, &parse_rational(x1)?, &parse_rational(x2)?)
    }
}

/// Coefficients of a rational polynomial, constant first.
pub fn poly_json(p: &Poly<Rational>) -> Vec<String> {
    rational_coeff_strings(p)
}

/// Coefficients of a rational binary form, `X^d` first.
pub fn form_json(f: &BinaryForm<Rational>) -> Vec<String> {
    strings(f.coeffs())
}
