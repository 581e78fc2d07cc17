//! Mahler measure, logarithmic Mahler measure, Weil height, signature and
//! the Salem/Kronecker classification.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::algnum::{bits_for, AlgebraicNumber};
use crate::arith::transcendental::ln;
use crate::arith::{Dyadic, Interval};
use crate::error::{Error, Result};
use crate::intpoly::{cyclotomic_index, enclose_root, factor_over_integers, isolate_roots_bits, IntPolynomial};

/// Counts of embeddings sending the number outside the closed unit disk:
/// real ones, and complex-conjugate pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub r1: usize,
    pub r2: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    RootOfUnityOrZeroPoly,
    Salem,
    UnitGeneral,
    NonUnit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub kind: Kind,
    pub signature: Signature,
}

/// `M(f) = 1` for an irreducible primitive `f`: `x` or a cyclotomic
/// polynomial.
fn measure_is_one(f: &IntPolynomial) -> bool {
    *f == IntPolynomial::x() || (f.is_monic() && cyclotomic_index(f).is_some())
}

/// `|lc| prod max(1, |root|)` for an irreducible `f`, each root enclosed to
/// `bits` bits.
fn irreducible_measure(f: &IntPolynomial, bits: u32) -> Interval {
    let wp = bits + 32;
    let mut acc = Interval::from_int(f.leading().abs());
    for b in isolate_roots_bits(f, 32) {
        let e = enclose_root(f, &b, bits + 8);
        let m = if b.is_real() { e.re.abs() } else { e.abs(wp) };
        let clipped = Interval::new(m.lo.max(Dyadic::one()), m.hi.max(Dyadic::one()));
        acc = acc.mul(&clipped, wp);
    }
    acc
}

/// Certified Mahler measure of a nonzero polynomial (roots counted with
/// multiplicity). The point interval 1 is returned exactly when `M(P) = 1`;
/// otherwise the interval lies strictly above 1.
pub fn mahler_poly(p: &IntPolynomial, precision: &BigRational) -> Result<Interval> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let factors: Vec<(IntPolynomial, usize)> =
        factor_over_integers(p)?.into_iter().filter(|(f, _)| !measure_is_one(f)).collect();
    if factors.is_empty() {
        return Ok(Interval::one());
    }
    let target = Dyadic::from_rational(precision, 64, crate::arith::Round::Down);
    let deg_bits = 64 - (p.degree() as u64).leading_zeros();
    let mut bits = bits_for(precision) + deg_bits + 8;
    loop {
        let wp = bits + 32;
        let mut acc = Interval::one();
        for (f, e) in &factors {
            let m = irreducible_measure(f, bits);
            acc = acc.mul(&m.powi(*e as i64, wp).expect("positive"), wp);
        }
        if acc.width() <= target && acc.lo > Dyadic::one() {
            return Ok(acc);
        }
        let grow = acc.hi.log2_abs().max(0.0) as u32;
        bits += bits / 2 + 16 + grow;
    }
}

pub fn mahler_alg(a: &AlgebraicNumber, precision: &BigRational) -> Result<Interval> {
    mahler_poly(a.minpoly(), precision)
}

/// `log M(P)`; exactly zero when `M(P) = 1`.
pub fn log_mahler_poly(p: &IntPolynomial, precision: &BigRational) -> Result<Interval> {
    let mut inner = precision / BigInt::from(4);
    loop {
        let m = mahler_poly(p, &inner)?;
        if m.is_point() && m.lo == Dyadic::one() {
            return Ok(Interval::zero());
        }
        let l = ln(&m, bits_for(precision) + 16).expect("measure is positive");
        if l.width().to_rational() <= *precision {
            return Ok(l);
        }
        inner /= BigInt::from(1u64 << 16);
    }
}

/// Logarithmic Mahler measure `m(a) = log M(minpoly a)`.
pub fn log_mahler(a: &AlgebraicNumber, precision: &BigRational) -> Result<Interval> {
    log_mahler_poly(a.minpoly(), precision)
}

/// Absolute logarithmic Weil height `m(a) / deg a`.
pub fn weil_height(a: &AlgebraicNumber, precision: &BigRational) -> Result<Interval> {
    let d = a.degree();
    let m = log_mahler(a, &(precision * BigInt::from(d)))?;
    if m.is_point() {
        return Ok(Interval::from_rational(&(m.lo.to_rational() / BigInt::from(d)), bits_for(precision) + 8));
    }
    Ok(m.div(&Interval::from_int(d as i64), bits_for(precision) + 16).expect("nonzero degree"))
}

/// Whether `|c| > 1`, decided exactly.
pub(crate) fn outside_unit_circle(c: &AlgebraicNumber) -> bool {
    if c.has_unit_modulus() {
        return false;
    }
    let iv = c.abs_at_selector(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 20)));
    iv.lo > Dyadic::one()
}

fn signature_unchecked(a: &AlgebraicNumber) -> Signature {
    if a.is_torsion().is_some() {
        return Signature { r1: 0, r2: 0 };
    }
    let mut r1 = 0;
    let mut cplx = 0;
    for c in a.conjugates() {
        if outside_unit_circle(&c) {
            if c.is_real() {
                r1 += 1;
            } else {
                cplx += 1;
            }
        }
    }
    Signature { r1, r2: cplx / 2 }
}

/// Signature of an algebraic integer.
pub fn signature(a: &AlgebraicNumber) -> Result<Signature> {
    if !a.is_algebraic_integer() {
        return Err(Error::NotMonic);
    }
    Ok(signature_unchecked(a))
}

/// Classification with the literal Salem definition (quadratic units of
/// the right shape are Salem numbers).
pub fn classify(a: &AlgebraicNumber) -> Classification {
    classify_with(a, false)
}

/// Classification; `strict` additionally requires Salem numbers to have
/// degree at least 4.
pub fn classify_with(a: &AlgebraicNumber, strict: bool) -> Classification {
    let signature = signature_unchecked(a);
    let kind = if a.is_zero() || a.is_torsion().is_some() {
        Kind::RootOfUnityOrZeroPoly
    } else if !a.is_unit() {
        Kind::NonUnit
    } else if is_salem(a, signature) && (!strict || a.degree() >= 4) {
        Kind::Salem
    } else {
        Kind::UnitGeneral
    };
    Classification { kind, signature }
}

fn is_salem(a: &AlgebraicNumber, sig: Signature) -> bool {
    if !a.is_real() || sig != (Signature { r1: 1, r2: 0 }) || !a.minpoly().is_self_reciprocal() {
        return false;
    }
    // a itself must be the conjugate outside the circle, and positive
    outside_unit_circle(a) && a.enclosure(32).re.lo.is_positive()
}
