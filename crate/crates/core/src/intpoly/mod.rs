//! Integer polynomials: normalization, resultants, composed products and
//! sums, factorization over Z, cyclotomic detection and certified root
//! isolation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

mod composed;
mod cyclotomic;
mod factor;
mod modp;
mod parse;
pub mod qx;
mod resultant;
mod roots;
pub mod zx;

pub use composed::{composed_product, composed_sum, power_poly};
pub(crate) use composed::{from_power_sums, power_sums};
pub(crate) use cyclotomic::cyclotomic_index;
pub use cyclotomic::{cyclotomic_poly, euler_phi, is_cyclotomic};
pub use factor::factor_over_integers;
pub(crate) use factor::factor_unchecked;
pub use parse::parse_poly;
pub use resultant::resultant;
pub(crate) use roots::eval_rect;
pub use roots::{enclose_root, isolate_roots, isolate_roots_bits, RootBox};

/// A primitive integer polynomial with positive leading coefficient, or the
/// zero polynomial. Coefficients are stored in ascending degree order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Normalizes arbitrary integer coefficients to primitive form.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs: zx::primitive(&coeffs) }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Primitive polynomial proportional to a rational one.
    pub fn from_rational(coeffs: &[BigRational]) -> Self {
        IntPolynomial { coeffs: qx::to_primitive_z(coeffs) }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: alloc::vec![BigInt::one()] }
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - c` scaled to primitive form, for rational `c`.
    pub fn linear_for(c: &BigRational) -> Self {
        Self::from_coeffs(alloc::vec![-c.numer().clone(), c.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        // Gauss: the product of primitive polynomials is primitive
        IntPolynomial { coeffs: zx::mul(&self.coeffs, &other.coeffs) }
    }

    pub fn pow(&self, e: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        zx::eval(&self.coeffs, x)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Whether `other` divides `self` over Z.
    pub fn divides(&self, other: &IntPolynomial) -> bool {
        !self.is_zero() && zx::div_exact(&other.coeffs, &self.coeffs).is_some()
    }

    /// Quotient by an exact divisor, normalized.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        zx::div_exact(&self.coeffs, &d.coeffs).map(Self::from_coeffs)
    }

    pub fn derivative(&self) -> IntPolynomial {
        Self::from_coeffs(zx::derivative(&self.coeffs))
    }

    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        IntPolynomial { coeffs: zx::gcd(&self.coeffs, &other.coeffs) }
    }

    /// `x^d P(1/x)`, normalized. Roots are inverted; zero roots are dropped.
    pub fn reversed(&self) -> IntPolynomial {
        Self::from_coeffs(zx::reverse(&self.coeffs))
    }

    /// `P(-x)`, normalized.
    pub fn negated_var(&self) -> IntPolynomial {
        Self::from_coeffs(zx::negate_var(&self.coeffs))
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides")
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || self.gcd(&self.derivative()).degree() == 0
    }

    /// Squarefree decomposition `P = prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        zx::squarefree_decomposition(&self.coeffs).into_iter().map(|(f, m)| (IntPolynomial { coeffs: f }, m)).collect()
    }

    /// `P` equals its reversal up to sign, i.e. the root set is closed under
    /// inversion (with multiplicity).
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.reversed() == *self && !self.constant_term().is_zero()
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        qx::from_z(&self.coeffs)
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !a.is_one() {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
