//! Complex rectangles (certified) and complex dyadic points (approximate).

use core::fmt;

use super::dyadic::{Dyadic, Round};
use super::interval::Interval;

/// Axis-aligned complex rectangle `re x im`.
#[derive(Clone, PartialEq, Eq)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CInterval { re, im }
    }

    pub fn real(re: Interval) -> Self {
        CInterval { re, im: Interval::zero() }
    }

    pub fn zero() -> Self {
        CInterval::real(Interval::zero())
    }

    pub fn one() -> Self {
        CInterval::real(Interval::one())
    }

    pub fn point(z: &CDyadic) -> Self {
        CInterval { re: Interval::point(z.re.clone()), im: Interval::point(z.im.clone()) }
    }

    /// Square enclosing the closed disk of radius `r` around `c`.
    pub fn disk(c: &CDyadic, r: &Dyadic) -> Self {
        CInterval { re: Interval::ball(&c.re, r), im: Interval::ball(&c.im, r) }
    }

    pub fn add(&self, o: &CInterval, prec: u32) -> CInterval {
        CInterval { re: self.re.add(&o.re, prec), im: self.im.add(&o.im, prec) }
    }

    pub fn sub(&self, o: &CInterval, prec: u32) -> CInterval {
        CInterval { re: self.re.sub(&o.re, prec), im: self.im.sub(&o.im, prec) }
    }

    pub fn neg(&self) -> CInterval {
        CInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> CInterval {
        CInterval { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &CInterval, prec: u32) -> CInterval {
        let wp = prec + 4;
        if self.im.is_point() && self.im.lo.is_zero() && o.im.is_point() && o.im.lo.is_zero() {
            return CInterval::real(self.re.mul(&o.re, prec));
        }
        let ac = self.re.mul(&o.re, wp);
        let bd = self.im.mul(&o.im, wp);
        let ad = self.re.mul(&o.im, wp);
        let bc = self.im.mul(&o.re, wp);
        CInterval { re: ac.sub(&bd, prec), im: ad.add(&bc, prec) }
    }

    pub fn mul_real(&self, r: &Interval, prec: u32) -> CInterval {
        CInterval { re: self.re.mul(r, prec), im: self.im.mul(r, prec) }
    }

    pub fn sqr(&self, prec: u32) -> CInterval {
        let wp = prec + 4;
        let re = self.re.sqr(wp).sub(&self.im.sqr(wp), prec);
        let im = self.re.mul(&self.im, wp).mul_pow2(1);
        CInterval { re, im }
    }

    /// `|z|^2` as a real interval.
    pub fn norm_sqr(&self, prec: u32) -> Interval {
        self.re.sqr(prec + 4).add(&self.im.sqr(prec + 4), prec)
    }

    pub fn abs(&self, prec: u32) -> Interval {
        self.norm_sqr(prec + 4).sqrt(prec)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn recip(&self, prec: u32) -> Option<CInterval> {
        let wp = prec + 8;
        if self.im.is_point() && self.im.lo.is_zero() {
            return self.re.recip(prec).map(CInterval::real);
        }
        let n = self.norm_sqr(wp);
        if !n.is_positive() {
            return None;
        }
        let inv = n.recip(wp)?;
        Some(self.conj().mul_real(&inv, prec))
    }

    pub fn div(&self, o: &CInterval, prec: u32) -> Option<CInterval> {
        Some(self.mul(&o.recip(prec + 8)?, prec))
    }

    pub fn powi(&self, n: i64, prec: u32) -> Option<CInterval> {
        if n < 0 {
            return self.powi(-n, prec + 8)?.recip(prec);
        }
        let mut n = n as u64;
        let wp = prec + 2 * (64 - n.leading_zeros()) + 4;
        let mut acc = CInterval::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, wp);
            }
            n >>= 1;
            if n > 0 {
                base = base.sqr(wp);
            }
        }
        Some(acc)
    }

    pub fn intersects(&self, o: &CInterval) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn strictly_contains(&self, o: &CInterval) -> bool {
        self.re.strictly_contains(&o.re) && self.im.strictly_contains(&o.im)
    }

    pub fn hull(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.hull(&o.re), im: self.im.hull(&o.im) }
    }

    pub fn mid(&self) -> CDyadic {
        CDyadic { re: self.re.mid(), im: self.im.mid() }
    }

    /// Upper bound on the distance from the midpoint to any point.
    pub fn radius(&self, prec: u32) -> Dyadic {
        let a = self.re.rad();
        let b = self.im.rad();
        a.mul(&a).add(&b.mul(&b)).round(prec, Round::Up).sqrt(prec, Round::Up)
    }

    /// Larger of the two side lengths.
    pub fn max_width(&self) -> Dyadic {
        self.re.width().max(self.im.width())
    }

    pub fn contains(&self, z: &CDyadic) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }
}

impl fmt::Debug for CInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + i{:?}", self.re, self.im)
    }
}

/// An exact complex dyadic number, used for approximate iterations.
#[derive(Clone, PartialEq, Eq)]
pub struct CDyadic {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl CDyadic {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        CDyadic { re, im }
    }

    pub fn zero() -> Self {
        CDyadic { re: Dyadic::zero(), im: Dyadic::zero() }
    }

    pub fn real(re: Dyadic) -> Self {
        CDyadic { re, im: Dyadic::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn round(&self, prec: u32) -> Self {
        CDyadic { re: self.re.round(prec, Round::Nearest), im: self.im.round(prec, Round::Nearest) }
    }

    pub fn add(&self, o: &CDyadic) -> CDyadic {
        CDyadic { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CDyadic) -> CDyadic {
        CDyadic { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn conj(&self) -> CDyadic {
        CDyadic { re: self.re.clone(), im: self.im.neg() }
    }

    /// Product rounded to `prec` bits per component.
    pub fn mul(&self, o: &CDyadic, prec: u32) -> CDyadic {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CDyadic { re, im }.round(prec)
    }

    pub fn norm_sqr(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Approximate quotient; `None` on division by zero.
    pub fn div(&self, o: &CDyadic, prec: u32) -> Option<CDyadic> {
        let n = o.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let num = CDyadic {
            re: self.re.mul(&o.re).add(&self.im.mul(&o.im)),
            im: self.im.mul(&o.re).sub(&self.re.mul(&o.im)),
        };
        Some(CDyadic { re: num.re.div(&n, prec, Round::Nearest), im: num.im.div(&n, prec, Round::Nearest) })
    }

    /// Approximate `log2 |z|`.
    pub fn log2_abs(&self) -> f64 {
        let n = self.norm_sqr();
        n.log2_abs() / 2.0
    }
}

impl fmt::Debug for CDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:e} + {:e}i)", self.re.to_f64(), self.im.to_f64())
    }
}
