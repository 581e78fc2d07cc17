//! Closed real intervals with dyadic endpoints and outward rounding.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dyadic::{Dyadic, Round};

/// A closed interval `[lo, hi]`. Every operation rounds outward, so the
/// result always contains the exact result of the operation applied to any
/// points of the operands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Interval::point(Dyadic::zero())
    }

    pub fn one() -> Self {
        Interval::point(Dyadic::one())
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Interval::point(Dyadic::from_int(v))
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        if let Some(d) = Dyadic::from_rational_exact(q) {
            return Interval::point(d);
        }
        Interval { lo: Dyadic::from_rational(q, prec, Round::Down), hi: Dyadic::from_rational(q, prec, Round::Up) }
    }

    /// `[c - r, c + r]`.
    pub fn ball(c: &Dyadic, r: &Dyadic) -> Self {
        Interval { lo: c.sub(r), hi: c.add(r) }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    /// Half-width, rounded up.
    pub fn rad(&self) -> Dyadic {
        self.width().mul_pow2(-1)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// `other` lies strictly inside `self`.
    pub fn strictly_contains(&self, other: &Interval) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.clone().min(other.lo.clone()), hi: self.hi.clone().max(other.hi.clone()) }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn add(&self, o: &Interval, prec: u32) -> Interval {
        Interval { lo: self.lo.add(&o.lo).round(prec, Round::Down), hi: self.hi.add(&o.hi).round(prec, Round::Up) }
    }

    pub fn sub(&self, o: &Interval, prec: u32) -> Interval {
        self.add(&o.neg(), prec)
    }

    pub fn mul(&self, o: &Interval, prec: u32) -> Interval {
        if self.is_point() && o.is_point() {
            let p = self.lo.mul(&o.lo);
            return Interval { lo: p.round(prec, Round::Down), hi: p.round(prec, Round::Up) };
        }
        let c = [self.lo.mul(&o.lo), self.lo.mul(&o.hi), self.hi.mul(&o.lo), self.hi.mul(&o.hi)];
        let mut lo = &c[0];
        let mut hi = &c[0];
        for x in &c[1..] {
            if x < lo {
                lo = x;
            }
            if x > hi {
                hi = x;
            }
        }
        Interval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up) }
    }

    pub fn mul_int(&self, k: i64, prec: u32) -> Interval {
        self.mul(&Interval::from_int(k), prec)
    }

    pub fn mul_pow2(&self, k: i64) -> Interval {
        Interval { lo: self.lo.mul_pow2(k), hi: self.hi.mul_pow2(k) }
    }

    pub fn sqr(&self, prec: u32) -> Interval {
        let a = self.abs();
        Interval { lo: a.lo.mul(&a.lo).round(prec, Round::Down), hi: a.hi.mul(&a.hi).round(prec, Round::Up) }
    }

    pub fn abs(&self) -> Interval {
        if self.lo.is_negative() {
            if self.hi.is_negative() {
                self.neg()
            } else {
                Interval { lo: Dyadic::zero(), hi: self.lo.neg().max(self.hi.clone()) }
            }
        } else {
            self.clone()
        }
    }

    /// `None` when the divisor contains zero.
    pub fn recip(&self, prec: u32) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        let one = Dyadic::one();
        Some(Interval { lo: one.div(&self.hi, prec, Round::Down), hi: one.div(&self.lo, prec, Round::Up) })
    }

    pub fn div(&self, o: &Interval, prec: u32) -> Option<Interval> {
        if o.contains_zero() {
            return None;
        }
        if o.is_point() && self.is_point() {
            return Some(Interval {
                lo: self.lo.div(&o.lo, prec, Round::Down),
                hi: self.lo.div(&o.lo, prec, Round::Up),
            });
        }
        let r = o.recip(prec + 8)?;
        Some(self.mul(&r, prec))
    }

    /// Square root of the non-negative part.
    pub fn sqrt(&self, prec: u32) -> Interval {
        let lo = if self.lo.is_positive() { self.lo.sqrt(prec, Round::Down) } else { Dyadic::zero() };
        let hi = if self.hi.is_positive() { self.hi.sqrt(prec, Round::Up) } else { Dyadic::zero() };
        Interval { lo, hi }
    }

    /// Integer power; negative exponents need an interval excluding zero.
    pub fn powi(&self, n: i64, prec: u32) -> Option<Interval> {
        if n < 0 {
            let p = self.powi(-n, prec + 8)?;
            return p.recip(prec);
        }
        let mut n = n as u64;
        if n == 0 {
            return Some(Interval::one());
        }
        let mut base = self.clone();
        let mut acc = Interval::one();
        let wp = prec + 2 * (64 - n.leading_zeros());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, wp);
            }
            n >>= 1;
            if n > 0 {
                base = base.sqr(wp);
            }
        }
        Some(acc.round(prec))
    }

    pub fn round(&self, prec: u32) -> Interval {
        Interval { lo: self.lo.round(prec, Round::Down), hi: self.hi.round(prec, Round::Up) }
    }

    pub fn lo_rational(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> BigRational {
        self.hi.to_rational()
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo.to_f64(), self.hi.to_f64())
    }
}
