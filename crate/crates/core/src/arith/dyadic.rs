//! Exact binary fractions `m * 2^e` with directed rounding to a fixed number
//! of significant bits.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rounding direction for [`Dyadic::round`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
    Nearest,
}

/// The value `man * 2^exp`. Normalized so that `man` is odd, or zero with
/// `exp == 0`; equal values therefore have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { man: BigInt::one(), exp: 0 }
    }

    pub fn new(man: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { man, exp };
        d.normalize();
        d
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic { man: BigInt::one(), exp: e }
    }

    fn normalize(&mut self) {
        if self.man.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.man.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.man >>= tz as usize;
            self.exp += tz as i64;
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    /// Position of the most significant bit: `2^(top-1) <= |x| < 2^top`.
    /// Meaningless for zero.
    pub fn top(&self) -> i64 {
        self.man.bits() as i64 + self.exp
    }

    pub fn neg(&self) -> Self {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &other.man << (other.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: &self.man * &other.man, exp: self.exp + other.exp }
    }

    /// Round to at most `prec` significant bits.
    pub fn round(&self, prec: u32, mode: Round) -> Self {
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as usize;
        let q = shift_floor(&self.man, shift);
        let man = match mode {
            Round::Down => q,
            Round::Up => q + 1,
            Round::Nearest => {
                // floor(x / 2^s + 1/2)
                let half = BigInt::one() << (shift - 1);
                shift_floor(&(&self.man + half), shift)
            }
        };
        Dyadic::new(man, self.exp + shift as i64)
    }

    /// `self / other` rounded to `prec` bits in direction `mode`.
    pub fn div(&self, other: &Self, prec: u32, mode: Round) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let na = self.man.bits() as i64;
        let nb = other.man.bits() as i64;
        let shift = (prec as i64 + 2 + nb - na).max(0);
        let num = &self.man << shift as usize;
        let (q, r) = num.div_mod_floor(&other.man);
        let exp = self.exp - other.exp - shift;
        let exact = r.is_zero();
        let man = match mode {
            Round::Down | Round::Nearest => q,
            Round::Up => {
                if exact {
                    q
                } else {
                    q + 1
                }
            }
        };
        // div_mod_floor floors toward -inf, so q is already the down-rounded
        // quotient for both signs.
        Dyadic::new(man, exp).round(prec, mode)
    }

    /// Exact conversion to a rational.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as usize)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Rational rounded to `prec` bits.
    pub fn from_rational(q: &BigRational, prec: u32, mode: Round) -> Self {
        let n = Dyadic::from_int(q.numer().clone());
        let d = Dyadic::from_int(q.denom().clone());
        if d.man.is_one() && d.exp == 0 {
            return n.round(prec, mode);
        }
        n.div(&d, prec, mode)
    }

    /// Exact when the rational is dyadic, `None` otherwise.
    pub fn from_rational_exact(q: &BigRational) -> Option<Self> {
        let d = q.denom();
        let tz = d.trailing_zeros().unwrap_or(0);
        if (d >> tz as usize).is_one() {
            Some(Dyadic::new(q.numer().clone(), -(tz as i64)))
        } else {
            None
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as usize
        } else {
            shift_floor(&self.man, (-self.exp) as usize)
        }
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// Nearest integer (ties toward +inf).
    pub fn round_int(&self) -> BigInt {
        self.add(&Dyadic::pow2(-1)).floor()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(60, Round::Nearest);
        let m = r.man.to_i64().unwrap_or(0) as f64;
        let e = r.exp.clamp(-4000, 4000) as i32;
        libm::ldexp(m, e)
    }

    /// Approximate base-2 logarithm of `|self|`; finite for nonzero values of
    /// any magnitude.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.man.bits() as i64;
        let keep = bits.min(60);
        let top = shift_floor(&self.man.abs(), (bits - keep) as usize);
        let m = top.to_u64().unwrap_or(1) as f64;
        libm::log2(m) + (bits - keep + self.exp) as f64
    }

    /// `2^l` as a dyadic with ~53 bits, for initial approximations.
    pub fn from_log2(l: f64) -> Self {
        let ip = libm::floor(l);
        let frac = l - ip;
        let m = libm::exp2(frac);
        Dyadic::from_f64(m).mul_pow2(ip as i64)
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Dyadic::zero();
        }
        let (m, e) = libm::frexp(x);
        let mi = libm::ldexp(m, 53) as i64;
        Dyadic::new(BigInt::from(mi), e as i64 - 53)
    }

    /// Floor of the square root, to `prec` bits (input must be non-negative).
    pub fn sqrt(&self, prec: u32, mode: Round) -> Self {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let bits = self.man.bits() as i64;
        let mut shift = (2 * prec as i64 + 4 - bits).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let scaled = &self.man << shift as usize;
        let r = scaled.sqrt();
        let exact = &r * &r == scaled;
        let man = if mode == Round::Up && !exact { r + 1 } else { r };
        Dyadic::new(man, (self.exp - shift) / 2).round(prec, mode)
    }
}

/// `floor(x / 2^s)` for signed `x`.
fn shift_floor(x: &BigInt, s: usize) -> BigInt {
    if s == 0 {
        return x.clone();
    }
    if x.is_negative() {
        // -ceil(|x| / 2^s)
        let a: BigInt = -x;
        let q: BigInt = &a >> s;
        if (&q << s) == a {
            -q
        } else {
            -(q + 1u32)
        }
    } else {
        x >> s
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // Same sign: compare magnitudes via top bit first.
        let ta = self.top();
        let tb = other.top();
        if ta != tb {
            let c = ta.cmp(&tb);
            return if sa > 0 { c } else { c.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &other.man << (other.exp - e) as usize;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{} (~{:e})", self.man, self.exp, self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}
