//! Diophantine lower-bound calculators: `kappa(n)`, the Amoroso-David
//! right-hand side, and the length bounds built from them. All constants
//! are caller-supplied; results are conditional on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::algnum::bits_for;
use crate::arith::transcendental::{ln, pow_real};
use crate::arith::Interval;
use crate::error::{Error, Result};

/// Label attached to every bound evaluation.
pub const CONDITIONAL: &str = "conditional on supplied constants";

/// Stand-ins for the ineffective constants. None have defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundParams {
    pub c_n: Option<BigRational>,
    pub c1: Option<BigRational>,
    pub c2: Option<BigRational>,
}

impl BoundParams {
    fn get(v: &Option<BigRational>, name: &str) -> Result<BigRational> {
        match v {
            None => Err(Error::InvalidArgument(alloc::format!("{name} is required"))),
            Some(q) if !q.is_positive() => Err(Error::InvalidArgument(alloc::format!("{name} must be positive"))),
            Some(q) => Ok(q.clone()),
        }
    }

    pub fn c_n(&self) -> Result<BigRational> {
        Self::get(&self.c_n, "c_n")
    }

    pub fn c1(&self) -> Result<BigRational> {
        Self::get(&self.c1, "C1")
    }

    pub fn c2(&self) -> Result<BigRational> {
        Self::get(&self.c2, "C2")
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `kappa(n) = (n+1) ((n+1)!)^n - n`.
pub fn kappa(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("kappa needs n >= 1".into()));
    }
    let f = factorial(n + 1);
    Ok(BigInt::from(n + 1) * num_traits::pow(f, n as usize) - n)
}

fn refine<F: Fn(u32) -> Result<Interval>>(precision: &BigRational, f: F) -> Result<Interval> {
    let mut bits = bits_for(precision) + 32;
    loop {
        let v = f(bits)?;
        if v.width().to_rational() <= *precision {
            return Ok(v);
        }
        bits *= 2;
    }
}

/// `c_n / D * log(3D)^(-n kappa(n))`.
pub fn amoroso_david_rhs(n: u64, d: u64, params: &BoundParams, precision: &BigRational) -> Result<Interval> {
    if d == 0 {
        return Err(Error::InvalidArgument("D must be positive".into()));
    }
    let c = params.c_n()?;
    let e = BigInt::from(n) * kappa(n)?;
    let e = e.to_i64().ok_or_else(|| Error::InvalidArgument("exponent n kappa(n) too large".into()))?;
    refine(precision, |bits| {
        // relative precision must absorb the exponent
        let wp = bits + 64 - e.leading_zeros();
        let l = ln(&Interval::from_int(3 * d), wp).expect("positive");
        let p = l.powi(-e, wp).expect("log 3D > 1");
        let q = Interval::from_rational(&(c.clone() / BigInt::from(d)), wp);
        Ok(p.mul(&q, wp))
    })
}

fn eps_bits(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

fn log_deg(deg_k: u64, wp: u32) -> Result<Interval> {
    if deg_k < 2 {
        return Err(Error::InvalidArgument("the field degree must be at least 2".into()));
    }
    Ok(ln(&Interval::from_int(deg_k), wp).expect("positive"))
}

/// `C1 deg (log deg)^(-C2)`.
pub fn cor35_rhs(deg_k: u64, params: &BoundParams, precision: &BigRational) -> Result<Interval> {
    let c1 = params.c1()?;
    let c2 = params.c2()?;
    log_deg(deg_k, 8)?;
    refine(precision, |bits| {
        let wp = bits + 32;
        let l = log_deg(deg_k, wp)?;
        let e = Interval::from_rational(&-c2.clone(), wp);
        let p = if c2.is_integer() {
            l.powi(-c2.to_integer().to_i64().unwrap_or(i64::MAX), wp).expect("log > 0")
        } else {
            pow_real(&l, &e, wp).expect("log > 0")
        };
        let c = Interval::from_rational(&(c1.clone() * BigInt::from(deg_k)), wp);
        Ok(c.mul(&p, wp))
    })
}

/// `C1^(1/2) deg^(1/2) (log deg)^(-C2/2)`, the square root of [`cor35_rhs`].
pub fn thm_d_length_bound(deg_k: u64, params: &BoundParams, precision: &BigRational) -> Result<Interval> {
    refine(precision, |bits| {
        let wp = bits + 16;
        let inner = cor35_rhs(deg_k, params, &eps_bits(wp))?;
        Ok(inner.sqrt(wp))
    })
}

/// The two-element bound `2 C1^(1/2) deg^(1/2) (log deg)^(-C2/2)` on
/// `l(g1) + l(g2)` for lengths with independent squares.
pub fn two_length_bound(deg_k: u64, params: &BoundParams, precision: &BigRational) -> Result<Interval> {
    Ok(thm_d_length_bound(deg_k, params, &(precision / BigInt::from(2)))?.mul_pow2(1))
}
