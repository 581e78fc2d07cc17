//! Absolute number fields `Q(theta)` with a fixed complex embedding of the
//! generator, elements as reduced rational polynomials in `theta`, and
//! polynomial gcds over the field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algnum::{locate, AlgebraicNumber};
use crate::arith::{CInterval, Dyadic, Interval};
use crate::intpoly::qx::{self, QVec};
use crate::intpoly::{composed_sum, factor_unchecked, IntPolynomial};

/// Element of a number field: coefficients in the power basis of the
/// generator, degree below the field degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem(pub(crate) QVec);

impl FieldElem {
    pub fn from_rational(q: BigRational) -> Self {
        FieldElem(qx::trim(alloc::vec![q]))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }
}

/// Polynomial over a number field, ascending coefficients.
pub type FieldPoly = Vec<FieldElem>;

#[derive(Clone, Debug)]
pub struct NumberField {
    gen: AlgebraicNumber,
    modulus: QVec,
    // Tr(theta^k) for k < degree
    traces: Vec<BigRational>,
}

impl NumberField {
    /// `Q(gen)` embedded so that the generator is `gen`.
    pub fn new(gen: AlgebraicNumber) -> Self {
        let d = gen.degree();
        let modulus = qx::monic(&gen.minpoly().to_rational());
        let mut traces = alloc::vec![BigRational::from_integer(BigInt::from(d))];
        traces.extend(crate::intpoly::power_sums(gen.minpoly(), d.saturating_sub(1)));
        NumberField { gen, modulus, traces }
    }

    pub fn rationals() -> Self {
        Self::new(AlgebraicNumber::zero())
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn generator(&self) -> &AlgebraicNumber {
        &self.gen
    }

    /// Monic defining polynomial.
    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    pub fn theta(&self) -> FieldElem {
        if self.degree() == 1 {
            return FieldElem::from_rational(self.gen.as_rational().unwrap());
        }
        FieldElem(qx::x())
    }

    pub fn elem(&self, coeffs: &[BigRational]) -> FieldElem {
        FieldElem(qx::rem(coeffs, &self.modulus))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(qx::add(&a.0, &b.0))
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(qx::sub(&a.0, &b.0))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem(qx::neg(&a.0))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(qx::rem(&qx::mul(&a.0, &b.0), &self.modulus))
    }

    pub fn scale(&self, a: &FieldElem, q: &BigRational) -> FieldElem {
        FieldElem(qx::trim(qx::scale(&a.0, q)))
    }

    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            return None;
        }
        let (_, s) = qx::ext_gcd_inv(&a.0, &self.modulus);
        Some(FieldElem(s))
    }

    pub fn pow(&self, a: &FieldElem, n: i64) -> Option<FieldElem> {
        let base = if n < 0 { self.inv(a)? } else { a.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = FieldElem::from_int(1);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Some(acc)
    }

    /// `h(s)` for a rational polynomial `h`.
    pub fn compose(&self, h: &[BigRational], s: &FieldElem) -> FieldElem {
        FieldElem(qx::compose_mod(h, &s.0, &self.modulus))
    }

    pub fn trace(&self, a: &FieldElem) -> BigRational {
        a.0.iter().zip(&self.traces).map(|(c, t)| c * t).sum()
    }

    /// Characteristic polynomial of multiplication by `a`, monic.
    pub fn char_poly(&self, a: &FieldElem) -> QVec {
        let d = self.degree();
        let mut ps = Vec::with_capacity(d);
        let mut p = a.clone();
        for k in 1..=d {
            if k > 1 {
                p = self.mul(&p, a);
            }
            ps.push(self.trace(&p));
        }
        crate::intpoly::from_power_sums(&ps, d)
    }

    pub fn norm(&self, a: &FieldElem) -> BigRational {
        let cp = self.char_poly(a);
        if self.degree().is_multiple_of(2) {
            cp[0].clone()
        } else {
            -cp[0].clone()
        }
    }

    /// Minimal polynomial over Q of an element.
    pub fn minpoly(&self, a: &FieldElem) -> IntPolynomial {
        IntPolynomial::from_rational(&self.char_poly(a)).squarefree_part()
    }

    /// Enclosure of `a` under the embedding sending the generator to
    /// `root`, a conjugate of the generator; width at most `2^-bits`.
    pub fn eval_at(&self, a: &FieldElem, root: &AlgebraicNumber, bits: u32) -> CInterval {
        if let Some(q) = a.as_rational() {
            return CInterval::real(Interval::from_rational(&q, bits + 8));
        }
        let target = Dyadic::pow2(-(bits as i64));
        let mag = coeff_bits(&a.0) + (a.0.len() as u32) * (1 + mag_of(root));
        let mut extra = 8 + mag;
        loop {
            let prec = bits + extra;
            let t = root.enclosure(prec);
            let mut acc = CInterval::zero();
            for c in a.0.iter().rev() {
                let ci = CInterval::real(Interval::from_rational(c, prec + 8));
                acc = acc.mul(&t, prec + 8).add(&ci, prec + 8);
            }
            if acc.max_width() <= target {
                return acc;
            }
            extra *= 2;
        }
    }

    /// The element as an algebraic number under the fixed embedding.
    pub fn to_algebraic(&self, a: &FieldElem) -> AlgebraicNumber {
        if let Some(q) = a.as_rational() {
            return AlgebraicNumber::from_rational(&q);
        }
        let p = self.minpoly(a);
        locate(core::slice::from_ref(&p), |bits| self.eval_at(a, &self.gen, bits))
    }

    /// The element's image under every embedding, in the canonical order of
    /// the generator's conjugates.
    pub fn embeddings(&self, a: &FieldElem) -> Vec<AlgebraicNumber> {
        let p = self.minpoly(a);
        self.gen
            .conjugates()
            .iter()
            .map(|r| {
                if let Some(q) = a.as_rational() {
                    return AlgebraicNumber::from_rational(&q);
                }
                locate(core::slice::from_ref(&p), |bits| self.eval_at(a, r, bits))
            })
            .collect()
    }

    /// `f(u + v x)` as a polynomial over the field.
    pub fn compose_linear(&self, f: &[BigRational], u: &FieldElem, v: &FieldElem) -> FieldPoly {
        let mut acc: FieldPoly = Vec::new();
        for c in f.iter().rev() {
            // acc = acc * (u + v x) + c
            let mut next: FieldPoly = alloc::vec![FieldElem(Vec::new()); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] = self.add(&next[i], &self.mul(a, u));
                next[i + 1] = self.add(&next[i + 1], &self.mul(a, v));
            }
            if next.is_empty() {
                next.push(FieldElem(Vec::new()));
            }
            next[0] = self.add(&next[0], &FieldElem::from_rational(c.clone()));
            acc = poly_trim(next);
        }
        acc
    }

    pub fn lift_poly(&self, f: &[BigRational]) -> FieldPoly {
        poly_trim(f.iter().map(|c| FieldElem::from_rational(c.clone())).collect())
    }

    fn make_monic(&self, b: &FieldPoly) -> FieldPoly {
        let inv = self.inv(b.last().unwrap()).expect("nonzero leading coefficient");
        b.iter().map(|c| self.mul(c, &inv)).collect()
    }

    /// Remainder by a monic polynomial.
    fn poly_rem(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let mut r = a.clone();
        let db = b.len() - 1;
        while r.len() > db {
            let k = r.len() - 1;
            let q = r[k].clone();
            for i in 0..=db {
                let t = self.mul(&q, &b[i]);
                r[k - db + i] = self.sub(&r[k - db + i], &t);
            }
            r = poly_trim(r);
        }
        r
    }

    /// Monic gcd over the field.
    pub fn poly_gcd(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let mut a = poly_trim(a.clone());
        let mut b = poly_trim(b.clone());
        while !b.is_empty() {
            b = self.make_monic(&b);
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            return a;
        }
        let inv = self.inv(a.last().unwrap()).unwrap();
        a.iter().map(|c| self.mul(c, &inv)).collect()
    }

    /// The power-basis expression of `a`, when `a` lies in the field (under
    /// the fixed embedding).
    pub fn express(&self, a: &AlgebraicNumber) -> Option<FieldElem> {
        if let Some(q) = a.as_rational() {
            return Some(FieldElem::from_rational(q));
        }
        let d = self.degree();
        if !d.is_multiple_of(a.degree()) {
            return None;
        }
        let (c, phi) = self.separating_sum(a);
        // gcd of m_a(x) and m_phi(x + c theta) is the minimal polynomial of
        // a over the field
        let ct = self.scale(&self.theta(), &BigRational::from_integer(BigInt::from(c)));
        let g = self.poly_gcd(
            &self.lift_poly(&a.minpoly().to_rational()),
            &self.compose_linear(&phi.minpoly().to_rational(), &ct, &FieldElem::from_int(1)),
        );
        if g.len() != 2 {
            return None;
        }
        Some(self.neg(&g[0]))
    }

    /// `(c, a + c theta)` with all conjugate sums `a_i + c theta_j`
    /// distinct.
    fn separating_sum(&self, a: &AlgebraicNumber) -> (i64, AlgebraicNumber) {
        for c in separators() {
            let cq = BigRational::from_integer(BigInt::from(c));
            let cs = composed_sum(a.minpoly(), &self.gen.scaled_minpoly(&cq)).expect("nonzero");
            if !cs.is_squarefree() {
                continue;
            }
            let fs: Vec<IntPolynomial> = factor_unchecked(&cs).into_iter().map(|(f, _)| f).collect();
            let ci = CInterval::real(Interval::from_int(c));
            let phi = locate(&fs, |bits| {
                let ct = self.gen.enclosure(bits + 8).mul(&ci, bits + 8);
                a.enclosure(bits + 2).add(&ct, bits + 4)
            });
            return (c, phi);
        }
        unreachable!("separators are infinite")
    }

    /// Adjoins `r` to the field: returns the field `Q(r + c theta)`, `c`,
    /// and the expressions of the old generator and of `r` in it. Over Q the
    /// new generator is `r` itself and `c = 0`.
    pub fn adjoin(&self, r: &AlgebraicNumber) -> (NumberField, i64, FieldElem, FieldElem) {
        if self.degree() == 1 {
            let k = NumberField::new(r.clone());
            let t = FieldElem::from_rational(self.gen.as_rational().unwrap());
            let rt = k.theta();
            return (k, 0, t, rt);
        }
        let (c, phi) = self.separating_sum(r);
        let k = NumberField::new(phi);
        let cq = BigRational::from_integer(BigInt::from(c));
        // gcd over Q(phi) of m_theta(x) and m_r(phi - c x) is x - theta
        let g = k.poly_gcd(
            &k.lift_poly(&self.modulus),
            &k.compose_linear(&r.minpoly().to_rational(), &k.theta(), &FieldElem::from_rational(-cq.clone())),
        );
        assert_eq!(g.len(), 2, "separating sum must give a linear gcd");
        let t = k.neg(&g[0]);
        let rt = k.sub(&k.theta(), &k.scale(&t, &cq));
        (k, c, t, rt)
    }
}

fn separators() -> impl Iterator<Item = i64> {
    (1i64..).flat_map(|k| [k, -k])
}

fn poly_trim(mut p: FieldPoly) -> FieldPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn coeff_bits(c: &[BigRational]) -> u32 {
    c.iter()
        .map(|q| {
            let n = q.numer().bits() as i64 - q.denom().bits() as i64;
            n.max(0) as u32 + 1
        })
        .max()
        .unwrap_or(0)
}

fn mag_of(a: &AlgebraicNumber) -> u32 {
    let s = a.selector();
    let m = num_traits::Signed::abs(&s.re) + num_traits::Signed::abs(&s.im) + &s.radius + BigRational::one();
    coeff_bits(&[m])
}
