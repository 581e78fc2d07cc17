//! Certified `ln`, `exp` and real powers on intervals.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::dyadic::{Dyadic, Round};
use super::interval::Interval;

/// `sum_{k>=0} z^(2k+1)/(2k+1)` for `|z| <= 1/2`, with the tail bound added.
fn atanh_series(z: &Interval, prec: u32) -> Interval {
    let wp = prec + 16;
    let z2 = z.sqr(wp);
    let zabs = z.abs().hi;
    let mut term = z.clone();
    let mut sum = z.clone();
    let mut k: i64 = 0;
    // |z|^(2k+1) upper bound tracked separately for the stopping rule
    let mut mag = zabs.clone();
    let target = Dyadic::pow2(-(prec as i64) - 4);
    loop {
        k += 1;
        term = term.mul(&z2, wp);
        mag = mag.mul(&zabs).mul(&zabs).round(wp, Round::Up);
        let t = term.div(&Interval::from_int(2 * k + 1), wp).expect("nonzero");
        sum = sum.add(&t, wp);
        if mag < target {
            break;
        }
    }
    // tail <= |z|^(2k+3) / (1 - z^2) <= 2 * mag * z^2 for |z| <= 1/2
    let tail = mag.mul(&zabs).mul(&zabs).mul_pow2(1).round(wp, Round::Up);
    Interval::new(sum.lo.sub(&tail), sum.hi.add(&tail)).round(wp)
}

/// `ln 2` enclosed to about `prec` bits.
pub fn ln2(prec: u32) -> Interval {
    let third = Interval::from_int(1).div(&Interval::from_int(3), prec + 16).expect("nonzero");
    atanh_series(&third, prec + 8).mul_pow2(1).round(prec + 4)
}

/// `ln x` for a positive dyadic point.
fn ln_point(x: &Dyadic, prec: u32) -> Interval {
    assert!(x.is_positive(), "logarithm of non-positive value");
    if *x == Dyadic::one() {
        return Interval::zero();
    }
    // x = y * 2^k with y in [3/4, 3/2)
    let mut k = x.top() - 1;
    let mut y = x.mul_pow2(-k);
    if y > Dyadic::new(BigInt::from(3), -1) {
        y = y.mul_pow2(-1);
        k += 1;
    }
    let kbits = 64 - (k.unsigned_abs()).leading_zeros();
    let wp = prec + 12 + kbits;
    let yi = Interval::point(y);
    let one = Interval::one();
    let z = yi.sub(&one, wp).div(&yi.add(&one, wp), wp).expect("positive");
    let main = atanh_series(&z, wp).mul_pow2(1);
    let l2 = ln2(wp);
    main.add(&l2.mul(&Interval::from_int(k), wp), wp).round(prec + 4)
}

/// Natural logarithm of an interval contained in `(0, inf)`.
pub fn ln(x: &Interval, prec: u32) -> Option<Interval> {
    if !x.lo.is_positive() {
        return None;
    }
    if x.is_point() {
        return Some(ln_point(&x.lo, prec));
    }
    let a = ln_point(&x.lo, prec);
    let b = ln_point(&x.hi, prec);
    Some(Interval::new(a.lo, b.hi))
}

fn exp_point(x: &Dyadic, prec: u32) -> Interval {
    if x.is_zero() {
        return Interval::one();
    }
    // x = k ln2 + r
    let approx = x.to_f64() / core::f64::consts::LN_2;
    let k: i64 = if approx.is_finite() { libm::floor(approx) as i64 } else { panic!("exp argument out of range") };
    let kbits = 64 - k.unsigned_abs().leading_zeros();
    let squarings: u32 = 12;
    let wp = prec + 20 + kbits + squarings;
    let l2 = ln2(wp + 8);
    let r = Interval::point(x.clone()).sub(&l2.mul(&Interval::from_int(k), wp), wp);
    let t = r.mul_pow2(-(squarings as i64));
    // Taylor sum with remainder; |t| < 2^-10
    let tabs = t.abs().hi;
    let mut sum = Interval::one();
    let mut term = Interval::one();
    let mut mag = Dyadic::one();
    let target = Dyadic::pow2(-(wp as i64) - 4);
    let mut j: i64 = 0;
    loop {
        j += 1;
        term = term.mul(&t, wp).div(&Interval::from_int(j), wp).expect("nonzero");
        sum = sum.add(&term, wp);
        mag = mag.mul(&tabs).div(&Dyadic::from_int(j), wp, Round::Up);
        if mag < target {
            break;
        }
    }
    // remainder <= 2 * |t|^(j+1)/(j+1)!  <= 2 * mag * |t|
    let rem = mag.mul(&tabs).mul_pow2(1).round(wp, Round::Up);
    let mut v = Interval::new(sum.lo.sub(&rem), sum.hi.add(&rem));
    for _ in 0..squarings {
        v = v.sqr(wp);
    }
    v.mul_pow2(k).round(prec + 4)
}

/// `e^x`.
pub fn exp(x: &Interval, prec: u32) -> Interval {
    if x.is_point() {
        return exp_point(&x.lo, prec);
    }
    let a = exp_point(&x.lo, prec);
    let b = exp_point(&x.hi, prec);
    Interval::new(a.lo, b.hi)
}

/// `base^e` for a positive base and real exponent.
pub fn pow_real(base: &Interval, e: &Interval, prec: u32) -> Option<Interval> {
    // integral exponents go through exact repeated squaring
    if e.is_point() {
        let f = e.lo.floor();
        if Dyadic::from_int(f.clone()) == e.lo {
            if let Some(n) = f.to_i64() {
                return base.powi(n, prec);
            }
        }
    }
    let l = ln(base, prec + 16)?;
    let extra = (l.abs().hi.top().max(0) + e.abs().hi.top().max(0)) as u32;
    Some(exp(&l.mul(e, prec + 16 + extra), prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(iv: &Interval, x: f64, tol: f64) -> bool {
        iv.lo.to_f64() <= x + tol && x - tol <= iv.hi.to_f64() && iv.width().to_f64() < tol
    }

    #[test]
    fn ln2_is_tight() {
        let l = ln2(200);
        assert!(close(&l, core::f64::consts::LN_2, 1e-15));
        assert!(l.width() < Dyadic::pow2(-190));
    }

    #[test]
    fn ln_of_various_points() {
        for &(v, e) in &[(3i64, 1.0986122886681098f64), (10, 2.302585092994046), (1, 0.0)] {
            let r = ln(&Interval::from_int(v), 100).unwrap();
            assert!(close(&r, e, 1e-14), "ln {v}: {r:?}");
        }
        let small = ln(&Interval::point(Dyadic::pow2(-1000)), 80).unwrap();
        assert!(close(&small, -1000.0 * core::f64::consts::LN_2, 1e-9));
    }

    #[test]
    fn exp_inverts_ln() {
        let x = Interval::from_int(7);
        let back = exp(&ln(&x, 120).unwrap(), 100);
        assert!(back.contains(&Dyadic::from_int(7)));
        assert!(back.width() < Dyadic::pow2(-80));
        let e1 = exp(&Interval::from_int(-3), 80);
        assert!(close(&e1, 0.049787068367863944, 1e-15));
    }

    #[test]
    fn real_power() {
        let r = pow_real(&Interval::from_int(2), &Interval::point(Dyadic::pow2(-1)), 90).unwrap();
        assert!(close(&r, core::f64::consts::SQRT_2, 1e-15));
    }
}
