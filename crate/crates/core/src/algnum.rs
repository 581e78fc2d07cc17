//! Algebraic numbers as an irreducible primitive minimal polynomial plus a
//! certified isolating disk.
//!
//! Every number is kept in canonical form: its selector is the disk of its
//! root in the isolation of the minimal polynomial at [`CANON_BITS`] bits,
//! and `index` is that root's position in the canonical root order. Two
//! numbers are equal exactly when minimal polynomial and index agree.

use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::arith::{CInterval, Dyadic, Interval, Round};
use crate::error::{Error, Result};
use crate::intpoly::{
    composed_product, composed_sum, cyclotomic_index, enclose_root, eval_rect, factor_over_integers, factor_unchecked,
    isolate_roots_bits, power_poly, IntPolynomial, RootBox,
};
use crate::limits::MAX_ALGEBRAIC_DEGREE;

/// Isolation precision of canonical selectors.
pub const CANON_BITS: u32 = 64;

#[derive(Clone)]
pub struct AlgebraicNumber {
    minpoly: IntPolynomial,
    index: usize,
    selector: RootBox,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.index == other.index
    }
}

impl Eq for AlgebraicNumber {}

impl Hash for AlgebraicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.minpoly.hash(state);
        self.index.hash(state);
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.enclosure(40);
        if self.is_real() {
            write!(f, "root #{} of {} (~{:.12})", self.index, self.minpoly, e.re.mid_f64())
        } else {
            write!(f, "root #{} of {} (~{:.12}{:+.12}i)", self.index, self.minpoly, e.re.mid_f64(), e.im.mid_f64())
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn canonical_boxes(p: &IntPolynomial) -> Vec<RootBox> {
    isolate_roots_bits(p, CANON_BITS)
}

/// Whether the disk of `b` meets the rectangle `r`.
pub(crate) fn disk_meets_rect(b: &RootBox, r: &CInterval) -> bool {
    let clamp = |c: &BigRational, lo: &Dyadic, hi: &Dyadic| {
        let l = lo.to_rational();
        let h = hi.to_rational();
        if c < &l {
            l
        } else if c > &h {
            h
        } else {
            c.clone()
        }
    };
    let x = clamp(&b.re, &r.re.lo, &r.re.hi);
    let y = clamp(&b.im, &r.im.lo, &r.im.hi);
    b.contains(&x, &y)
}

/// Finds which root of which polynomial is the number enclosed by
/// `rect(bits)`; the number must be a root of exactly one of `polys`.
pub(crate) fn locate<F: Fn(u32) -> CInterval>(polys: &[IntPolynomial], rect: F) -> AlgebraicNumber {
    let mut alive: Vec<usize> = (0..polys.len()).collect();
    let mut canon: Option<Vec<RootBox>> = None;
    let mut bits = 24u32;
    loop {
        let r = rect(bits);
        if alive.len() > 1 {
            alive.retain(|&i| eval_rect(&polys[i], &r, bits + 32).contains_zero());
            assert!(!alive.is_empty(), "target is not a root of the candidate polynomials");
        }
        if alive.len() == 1 {
            let p = &polys[alive[0]];
            if p.degree() == 1 {
                return AlgebraicNumber::from_rational(&linear_root(p));
            }
            let boxes = canon.get_or_insert_with(|| canonical_boxes(p));
            let hits: Vec<usize> = (0..boxes.len()).filter(|&i| disk_meets_rect(&boxes[i], &r)).collect();
            assert!(!hits.is_empty(), "target is not a root of the candidate polynomials");
            if hits.len() == 1 {
                let i = hits[0];
                return AlgebraicNumber { minpoly: p.clone(), index: i, selector: boxes[i].clone() };
            }
        }
        bits *= 2;
        assert!(bits < 1 << 20, "could not separate candidate roots");
    }
}

fn linear_root(p: &IntPolynomial) -> BigRational {
    let c = p.coeffs();
    BigRational::new(-c[0].clone(), c[1].clone())
}

impl AlgebraicNumber {
    pub fn from_rational(q: &BigRational) -> Self {
        AlgebraicNumber {
            minpoly: IntPolynomial::linear_for(q),
            index: 0,
            selector: RootBox::new(
                q.clone(),
                BigRational::zero(),
                rat(1, 1) / BigRational::from_integer(BigInt::one() << 64),
            ),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// The `index`-th distinct root of `p` in canonical order.
    pub fn from_root(p: &IntPolynomial, index: usize) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sq = p.squarefree_part();
        let boxes = isolate_roots_bits(&sq, CANON_BITS);
        if index >= boxes.len() {
            return Err(Error::IndexOutOfRange { index, count: boxes.len() });
        }
        let factors: Vec<IntPolynomial> = factor_over_integers(p)?.into_iter().map(|(f, _)| f).collect();
        if factors.len() == 1 && factors[0] == sq {
            return Ok(Self::from_irreducible_index(&sq, index, boxes));
        }
        let b = boxes[index].clone();
        Ok(locate(&factors, |bits| enclose_root(&sq, &b, bits)))
    }

    fn from_irreducible_index(p: &IntPolynomial, index: usize, boxes: Vec<RootBox>) -> Self {
        if p.degree() == 1 {
            return Self::from_rational(&linear_root(p));
        }
        AlgebraicNumber { minpoly: p.clone(), index, selector: boxes[index].clone() }
    }

    /// Builds a number from an irreducible polynomial and any disk that
    /// isolates one of its roots.
    pub fn from_parts(minpoly: IntPolynomial, selector: RootBox) -> Result<Self> {
        if minpoly.is_zero() || minpoly.degree() == 0 {
            return Err(Error::ZeroPolynomial);
        }
        if minpoly.degree() > MAX_ALGEBRAIC_DEGREE {
            return Err(Error::DegreeLimit { degree: minpoly.degree(), limit: MAX_ALGEBRAIC_DEGREE });
        }
        let fs = factor_over_integers(&minpoly)?;
        if fs.len() != 1 || fs[0].1 != 1 {
            return Err(Error::Reducible);
        }
        if !selector.radius.is_positive() {
            return Err(Error::InvalidArgument("selector radius must be positive".into()));
        }
        if minpoly.degree() == 1 {
            let q = linear_root(&minpoly);
            if !selector.contains(&q, &BigRational::zero()) {
                return Err(Error::InvalidArgument("selector does not contain the root".into()));
            }
            return Ok(Self::from_rational(&q));
        }
        let boxes = canonical_boxes(&minpoly);
        // the selector must contain exactly one root; roots are resolved by
        // refining canonical disks until each is inside or outside it
        let mut bits = CANON_BITS;
        loop {
            let fine = isolate_roots_bits(&minpoly, bits);
            let inside: Vec<usize> = (0..fine.len()).filter(|&i| selector.contains_box(&fine[i])).collect();
            let meeting = (0..fine.len()).filter(|&i| selector.intersects(&fine[i])).count();
            if inside.len() == meeting {
                if inside.len() != 1 {
                    return Err(Error::InvalidArgument("selector does not isolate a single root".into()));
                }
                let f = fine[inside[0]].clone();
                let index = if bits == CANON_BITS {
                    inside[0]
                } else {
                    let target = locate(core::slice::from_ref(&minpoly), |b| enclose_root(&minpoly, &f, b));
                    target.index
                };
                return Ok(AlgebraicNumber { minpoly, index, selector: boxes[index].clone() });
            }
            bits *= 2;
            if bits > 1 << 14 {
                return Err(Error::InvalidArgument("selector boundary passes through a root".into()));
            }
        }
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn selector(&self) -> &RootBox {
        &self.selector
    }

    /// Position of the root in the canonical order of the roots of the
    /// minimal polynomial.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| linear_root(&self.minpoly))
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.minpoly.constant_term().is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    pub fn is_real(&self) -> bool {
        self.selector.is_real()
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.minpoly.is_monic()
    }

    /// Algebraic unit: integral with constant term of minimal polynomial
    /// equal to `+-1`.
    pub fn is_unit(&self) -> bool {
        self.is_algebraic_integer() && self.minpoly.constant_term().abs().is_one()
    }

    /// Rectangle of side at most `2^-bits` containing the number; real
    /// numbers get a zero-width imaginary part.
    pub fn enclosure(&self, bits: u32) -> CInterval {
        if let Some(q) = self.as_rational() {
            return CInterval::real(Interval::from_rational(&q, bits + 4));
        }
        enclose_root(&self.minpoly, &self.selector, bits)
    }

    /// All roots of the minimal polynomial, canonical order.
    pub fn conjugates(&self) -> Vec<AlgebraicNumber> {
        if self.is_rational() {
            return alloc::vec![self.clone()];
        }
        canonical_boxes(&self.minpoly)
            .into_iter()
            .enumerate()
            .map(|(index, selector)| AlgebraicNumber { minpoly: self.minpoly.clone(), index, selector })
            .collect()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> AlgebraicNumber {
        if self.is_real() {
            return self.clone();
        }
        let s = self.clone();
        locate(core::slice::from_ref(&self.minpoly), move |b| s.enclosure(b).conj())
    }

    pub fn neg(&self) -> AlgebraicNumber {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(&-q);
        }
        let p = self.minpoly.negated_var();
        let s = self.clone();
        locate(core::slice::from_ref(&p), move |b| s.enclosure(b).neg())
    }

    pub fn inv(&self) -> Result<AlgebraicNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&q.recip()));
        }
        let p = self.minpoly.reversed();
        let s = self.clone();
        Ok(locate(core::slice::from_ref(&p), move |b| recip_rect(&s, b)))
    }

    pub fn mul(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return Self::from_rational(&(a * b)),
            (Some(q), None) => return other.scale(&q),
            (None, Some(q)) => return self.scale(&q),
            _ => {}
        }
        let cp = composed_product(&self.minpoly, &other.minpoly).expect("nonzero constant terms");
        let fs: Vec<IntPolynomial> = factor_unchecked(&cp).into_iter().map(|(f, _)| f).collect();
        let (a, b) = (self.clone(), other.clone());
        locate(&fs, move |bits| {
            let ea = a.enclosure(bits + 8 + mag_bits(&b));
            let eb = b.enclosure(bits + 8 + mag_bits(&a));
            ea.mul(&eb, bits + 8)
        })
    }

    pub fn add(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Self::from_rational(&(a + b));
        }
        let cs = composed_sum(&self.minpoly, &other.minpoly).expect("nonzero polynomials");
        let fs: Vec<IntPolynomial> = factor_unchecked(&cs).into_iter().map(|(f, _)| f).collect();
        let (a, b) = (self.clone(), other.clone());
        locate(&fs, move |bits| a.enclosure(bits + 2).add(&b.enclosure(bits + 2), bits + 4))
    }

    pub fn sub(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        self.add(&other.neg())
    }

    /// Minimal polynomial of `q * self`, `q != 0`.
    pub(crate) fn scaled_minpoly(&self, q: &BigRational) -> IntPolynomial {
        // P(x/q) u^d with q = u/v
        let d = self.degree();
        let (u, v) = (q.numer(), q.denom());
        let coeffs: Vec<BigInt> = self
            .minpoly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * Pow::pow(v, k as u32) * Pow::pow(u, (d - k) as u32))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `q * self` for rational `q != 0`.
    fn scale(&self, q: &BigRational) -> AlgebraicNumber {
        if q.is_one() {
            return self.clone();
        }
        let p = self.scaled_minpoly(q);
        let s = self.clone();
        let q = q.clone();
        let qb = mag_bits_rational(&q);
        locate(core::slice::from_ref(&p), move |bits| {
            let qi = CInterval::real(Interval::from_rational(&q, bits + 8 + qb));
            s.enclosure(bits + 8 + qb).mul(&qi, bits + 8)
        })
    }

    /// `self^n`; negative exponents need a nonzero number.
    pub fn pow(&self, n: i64) -> Result<AlgebraicNumber> {
        if n == 0 {
            return Ok(Self::one());
        }
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        if let Some(q) = self.as_rational() {
            let num = Pow::pow(q.numer(), n as u32);
            let den = Pow::pow(q.denom(), n as u32);
            return Ok(Self::from_rational(&BigRational::new(num, den)));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let pp = power_poly(&self.minpoly, n as usize);
        let fs: Vec<IntPolynomial> = factor_unchecked(&pp).into_iter().map(|(f, _)| f).collect();
        let s = self.clone();
        let extra = 8 + 64 - (n as u64).leading_zeros() + (n as u32).saturating_mul(mag_bits(&s));
        Ok(locate(&fs, move |bits| s.enclosure(bits + extra).powi(n, bits + 8).expect("nonnegative power")))
    }

    /// `|self|` as an interval of width at most `2^-bits`.
    pub fn abs_interval(&self, bits: u32) -> Interval {
        let e = self.enclosure(bits + 4 + mag_bits(self));
        if e.im.is_point() && e.im.lo.is_zero() {
            return e.re.abs();
        }
        e.abs(bits + 4)
    }

    /// Least `n >= 1` with `self^n = 1`.
    pub fn is_torsion(&self) -> Option<u64> {
        if !self.is_algebraic_integer() {
            return None;
        }
        cyclotomic_index(&self.minpoly)
    }

    /// Exact decision of `|self| = 1`: roots of unity, or numbers whose
    /// complex conjugate equals their inverse.
    pub fn has_unit_modulus(&self) -> bool {
        if self.is_torsion().is_some() {
            return true;
        }
        if self.is_real() || !self.is_unit() || !self.minpoly.is_self_reciprocal() {
            // a real non-torsion number has modulus 1 only if it is +-1
            return false;
        }
        // conj(a) and 1/a are both roots of the reciprocal real minpoly
        let a = self.clone();
        let b = self.clone();
        same_root(&self.minpoly, move |bits| a.enclosure(bits).conj(), move |bits| recip_rect(&b, bits))
    }

    /// Certified `|self|`, of width at most `precision`, excluding 1 unless
    /// `|self| = 1` exactly (then the point interval 1 is returned).
    pub fn abs_at_selector(&self, precision: &BigRational) -> Interval {
        if self.has_unit_modulus() {
            return Interval::one();
        }
        let mut bits = bits_for(precision);
        loop {
            let iv = self.abs_interval(bits);
            if !iv.contains(&Dyadic::one()) {
                return iv;
            }
            bits = bits * 2 + 8;
        }
    }
}

/// Bits needed so that `2^-bits <= precision`.
pub fn bits_for(precision: &BigRational) -> u32 {
    assert!(precision.is_positive());
    let mut bits = 0u32;
    let mut t = BigRational::one();
    let half = rat(1, 2);
    while &t > precision {
        t = &t * &half;
        bits += 1;
    }
    bits
}

/// Rough `log2` of the magnitude, nonnegative.
fn mag_bits(a: &AlgebraicNumber) -> u32 {
    let e = a.selector();
    let m = e.re.abs() + e.im.abs() + &e.radius + BigRational::one();
    mag_bits_rational(&m)
}

fn mag_bits_rational(q: &BigRational) -> u32 {
    let d = Dyadic::from_rational(&q.abs(), 16, Round::Up);
    if d.is_zero() {
        0
    } else {
        d.top().max(0) as u32 + 1
    }
}

fn recip_rect(a: &AlgebraicNumber, bits: u32) -> CInterval {
    // |1/a| is bounded through a lower bound on |a|
    let mut extra = 8;
    loop {
        let e = a.enclosure(bits + extra);
        if let Some(r) = e.recip(bits + extra) {
            if r.max_width() <= Dyadic::pow2(-(bits as i64)) {
                return r;
            }
        }
        extra = extra * 2 + 8;
    }
}

/// Whether two enclosure sequences of roots of `p` pick out the same root.
pub(crate) fn same_root<F, G>(p: &IntPolynomial, f: F, g: G) -> bool
where
    F: Fn(u32) -> CInterval,
    G: Fn(u32) -> CInterval,
{
    let mut bits = CANON_BITS;
    let boxes = canonical_boxes(p);
    loop {
        let a = f(bits);
        let b = g(bits);
        if !a.intersects(&b) {
            return false;
        }
        let ia: Vec<usize> = (0..boxes.len()).filter(|&i| disk_meets_rect(&boxes[i], &a)).collect();
        let ib: Vec<usize> = (0..boxes.len()).filter(|&i| disk_meets_rect(&boxes[i], &b)).collect();
        if ia.len() == 1 && ib.len() == 1 {
            return ia[0] == ib[0];
        }
        bits *= 2;
        assert!(bits < 1 << 20, "could not decide root identity");
    }
}

/// The `index`-th root of `p` (canonical order), with the owning
/// irreducible factor as minimal polynomial.
pub fn alg_from_root(p: &IntPolynomial, index: usize) -> Result<AlgebraicNumber> {
    AlgebraicNumber::from_root(p, index)
}

pub fn alg_mul(a: &AlgebraicNumber, b: &AlgebraicNumber) -> AlgebraicNumber {
    a.mul(b)
}

pub fn alg_inv(a: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    a.inv()
}

pub fn alg_pow(a: &AlgebraicNumber, n: i64) -> Result<AlgebraicNumber> {
    a.pow(n)
}

pub fn alg_equal(a: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    a == b
}

pub fn conjugates(a: &AlgebraicNumber) -> Vec<AlgebraicNumber> {
    a.conjugates()
}

pub fn is_torsion(a: &AlgebraicNumber) -> Option<u64> {
    a.is_torsion()
}

pub fn abs_at_selector(a: &AlgebraicNumber, precision: &BigRational) -> Interval {
    a.abs_at_selector(precision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    fn p(s: &str) -> IntPolynomial {
        parse_poly(s).unwrap()
    }

    fn golden() -> AlgebraicNumber {
        // (3 + sqrt 5)/2 is the last root of x^2 - 3x + 1
        AlgebraicNumber::from_root(&p("x^2 - 3x + 1"), 1).unwrap()
    }

    #[test]
    fn inverse_and_product() {
        let g = golden();
        let gi = g.inv().unwrap();
        assert_eq!(gi.minpoly(), &p("x^2 - 3x + 1"));
        assert_eq!(gi.index(), 0);
        assert!(g.mul(&gi).is_one());
        let g2 = g.pow(2).unwrap();
        assert_eq!(g2.minpoly(), &p("x^2 - 7x + 1"));
        assert_eq!(g.mul(&g), g2);
        assert!(g.pow(-3).unwrap().mul(&g.pow(3).unwrap()).is_one());
    }

    #[test]
    fn rational_scaling() {
        let s2 = AlgebraicNumber::from_root(&p("x^2 - 2"), 1).unwrap();
        let t = s2.mul(&AlgebraicNumber::from_rational(&rat(3, 2)));
        assert_eq!(t.minpoly(), &p("2x^2 - 9"));
        assert_eq!(s2.mul(&s2).as_rational(), Some(rat(2, 1)));
        assert_eq!(s2.add(&s2.neg()), AlgebraicNumber::zero());
    }

    #[test]
    fn torsion_and_modulus() {
        let q = crate::intpoly::parse_poly("x^4 - x^2 + 1").unwrap();
        println!("f {:?}", crate::intpoly::factor_over_integers(&q));
        println!("iso {:?}", isolate_roots_bits(&q, 64).len());
        let z = AlgebraicNumber::from_root(&p("x^4 - x^2 + 1"), 0).unwrap();
        assert_eq!(z.is_torsion(), Some(12));
        assert!(z.has_unit_modulus());
        let salem = p("x^4 - x^3 - x^2 - x + 1");
        let roots = AlgebraicNumber::from_root(&salem, 0).unwrap().conjugates();
        assert_eq!(roots.len(), 4);
        let on_circle: Vec<bool> = roots.iter().map(|r| r.has_unit_modulus()).collect();
        assert_eq!(on_circle, [true, true, false, false]);
        assert_eq!(roots[0].conj(), roots[1]);
        assert_eq!(roots[1].abs_at_selector(&rat(1, 1000)), Interval::one());
        let big = roots[3].abs_at_selector(&rat(1, 1_000_000));
        assert!(big.lo.to_f64() > 1.7220 && big.hi.to_f64() < 1.7221);
        let m = AlgebraicNumber::from_root(&p("x^4 - x - 1"), 1).unwrap();
        assert!(!m.has_unit_modulus());
    }

    #[test]
    fn reducible_input() {
        let q = p("x^3 - x^2 - 2x + 2"); // (x - 1)(x^2 - 2)
        let rs: Vec<_> = (0..3).map(|i| AlgebraicNumber::from_root(&q, i).unwrap()).collect();
        assert_eq!(rs[0].minpoly(), &p("x^2 - 2"));
        assert!(rs[1].is_one());
        assert_eq!(rs[2].index(), 1);
        assert!(matches!(AlgebraicNumber::from_root(&q, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn from_parts_canonicalizes() {
        let g = golden();
        let wide = RootBox::new(rat(5, 2), BigRational::zero(), rat(1, 2));
        let h = AlgebraicNumber::from_parts(p("x^2 - 3x + 1"), wide).unwrap();
        assert_eq!(h, g);
        assert_eq!(h.selector(), g.selector());
        let both = RootBox::new(rat(1, 1), BigRational::zero(), rat(5, 2));
        assert!(AlgebraicNumber::from_parts(p("x^2 - 3x + 1"), both).is_err());
        assert_eq!(AlgebraicNumber::from_parts(p("x^2 - 1"), g.selector().clone()), Err(Error::Reducible));
    }
}
