//! JSON encodings of certified values. Numbers are never written as floats:
//! rationals are `"p/q"` strings and intervals are `{"lo", "hi"}` pairs of
//! them.

use num_rational::BigRational;
use serde_json::{json, Value};

use salemforge_core::arith::Interval;
use salemforge_core::heights::{Classification, Kind};
use salemforge_core::lattice::Comparison;
use salemforge_core::{AlgebraicNumber, IntPolynomial};

use crate::format::parse_rational;

/// Bits used for the enclosures printed next to algebraic numbers.
const ENCLOSURE_BITS: u32 = 64;

pub fn rat(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn interval(iv: &Interval) -> Value {
    json!({ "lo": rat(&iv.lo_rational()), "hi": rat(&iv.hi_rational()) })
}

pub fn poly(p: &IntPolynomial) -> Value {
    Value::String(p.to_text())
}

pub fn number(a: &AlgebraicNumber) -> Value {
    let e = a.enclosure(ENCLOSURE_BITS);
    json!({
        "minpoly": poly(a.minpoly()),
        "index": a.index(),
        "degree": a.degree(),
        "re": interval(&e.re),
        "im": interval(&e.im),
    })
}

pub fn numbers(v: &[AlgebraicNumber]) -> Value {
    Value::Array(v.iter().map(number).collect())
}

pub fn kind(k: Kind) -> &'static str {
    match k {
        Kind::RootOfUnityOrZeroPoly => "root-of-unity-or-zero",
        Kind::Salem => "salem",
        Kind::UnitGeneral => "unit",
        Kind::NonUnit => "non-unit",
    }
}

pub fn classification(c: &Classification) -> Value {
    json!({
        "kind": kind(c.kind),
        "signature": { "r1": c.signature.r1, "r2": c.signature.r2 },
    })
}

pub fn comparison(c: Comparison) -> &'static str {
    match c {
        Comparison::Equal => "equal",
        Comparison::Less => "less",
        Comparison::Violated => "violated",
    }
}

/// Reads back an interval written by [`interval`].
pub fn parse_interval(v: &Value) -> Option<(BigRational, BigRational)> {
    let obj = v.as_object()?;
    if obj.len() != 2 {
        return None;
    }
    let lo = parse_rational(obj.get("lo")?.as_str()?).ok()?;
    let hi = parse_rational(obj.get("hi")?.as_str()?).ok()?;
    Some((lo, hi))
}
