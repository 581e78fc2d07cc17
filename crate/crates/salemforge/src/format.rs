//! Input documents: element specs, construction inputs, and the rational
//! syntax shared by flags and files.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use salemforge_core::intpoly::parse_poly;
use salemforge_core::lattice::{Place, SemisimpleElementSpec};
use salemforge_core::IntPolynomial;

use crate::CliError;

/// A coefficient: a JSON integer, or a string holding an integer or `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    pub fn to_rational(&self) -> Result<BigRational, CliError> {
        match self {
            Coeff::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Coeff::Text(s) => parse_rational(s),
        }
    }

    pub fn from_rational(q: &BigRational) -> Coeff {
        match q.to_integer().try_into() {
            Ok(n) if q.is_integer() => Coeff::Int(n),
            _ => Coeff::Text(q.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceFile {
    pub embedding: usize,
    #[serde(default)]
    pub compact: bool,
}

fn sl() -> String {
    "SL".into()
}

fn unit_scale() -> Coeff {
    Coeff::Int(1)
}

/// On-disk form of a semisimple element. Polynomials and entries are
/// coefficient arrays in ascending powers of the field generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field_poly: Vec<Coeff>,
    pub matrix: Vec<Vec<Vec<Coeff>>>,
    #[serde(default = "sl")]
    pub group_kind: String,
    pub places: Vec<PlaceFile>,
    #[serde(default = "unit_scale")]
    pub metric_scale: Coeff,
}

impl SpecFile {
    pub fn from_json(text: &str) -> Result<SpecFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("element spec: {e}")))
    }

    pub fn read(path: &Path) -> Result<SpecFile, CliError> {
        Self::from_json(&read_text(path)?)
    }

    pub fn to_spec(&self) -> Result<SemisimpleElementSpec, CliError> {
        if self.group_kind != "SL" {
            return Err(CliError::parse(format!("unsupported group_kind {:?}", self.group_kind)));
        }
        let fp = self.field_poly.iter().map(Coeff::to_rational).collect::<Result<Vec<_>, _>>()?;
        if fp.iter().any(|c| !c.is_integer()) {
            return Err(CliError::parse("field_poly coefficients must be integers"));
        }
        let field_poly = IntPolynomial::from_rational(&fp);
        if field_poly.degree() == 0 {
            return Err(CliError::parse("field_poly must be nonconstant"));
        }
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.iter().map(Coeff::to_rational).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let places = self.places.iter().map(|p| Place { embedding: p.embedding, compact: p.compact }).collect();
        let mut spec = SemisimpleElementSpec::new(field_poly, matrix, places);
        spec.metric_scale = self.metric_scale.to_rational()?;
        Ok(spec)
    }

    pub fn from_spec(spec: &SemisimpleElementSpec) -> SpecFile {
        let coeffs = |v: &[BigRational]| v.iter().map(Coeff::from_rational).collect::<Vec<_>>();
        SpecFile {
            name: None,
            field_poly: spec
                .field_poly
                .coeffs()
                .iter()
                .map(|c| Coeff::from_rational(&BigRational::from_integer(c.clone())))
                .collect(),
            matrix: spec.matrix.iter().map(|r| r.iter().map(|e| coeffs(e)).collect()).collect(),
            group_kind: sl(),
            places: spec.places.iter().map(|p| PlaceFile { embedding: p.embedding, compact: p.compact }).collect(),
            metric_scale: Coeff::from_rational(&spec.metric_scale),
        }
    }
}

/// Input to `construct-salem` given as a file: a number, and the field whose
/// automorphisms act on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub poly: String,
    pub index: usize,
    /// Polynomial whose splitting field is the context; defaults to `poly`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    /// Base field polynomial; defaults to `x`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

pub fn poly(text: &str) -> Result<IntPolynomial, CliError> {
    parse_poly(text).map_err(|e| CliError::parse(format!("{text:?}: {e}")))
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// Integers, `p/q`, decimals and scientific notation, all read exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::parse(format!("not a rational number: {text:?}"));
    let s = text.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let mut q = BigRational::from_integer(digits);
    if scale >= 0 {
        q *= BigRational::from_integer(pow10(scale as u32));
    } else {
        q /= BigRational::from_integer(pow10((-scale) as u32));
    }
    Ok(if neg { -q } else { q })
}

pub fn parse_precision(text: &str) -> Result<BigRational, CliError> {
    let q = parse_rational(text)?;
    if !q.is_positive() || q >= BigRational::one() {
        return Err(CliError::parse("precision must lie in (0, 1)"));
    }
    Ok(q)
}
