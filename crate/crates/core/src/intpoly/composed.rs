use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qx::{self, QVec};
use super::resultant::resultant_z;
use super::IntPolynomial;
use crate::error::{Error, Result};

/// Interpolates the degree-`deg` integer polynomial `x -> f(x)` from its
/// values at `0..=deg`.
fn interpolate_from(deg: usize, f: impl Fn(&BigInt) -> BigInt) -> IntPolynomial {
    let xs: Vec<BigRational> = (0..=deg).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
    let ys: Vec<BigRational> = xs.iter().map(|x| BigRational::from_integer(f(x.numer()))).collect();
    IntPolynomial::from_rational(&qx::interpolate(&xs, &ys))
}

/// Polynomial of degree `deg P * deg Q` whose roots are the products
/// `alpha_i * beta_j`, computed as `Res_y(P(y), y^deg Q * Q(x/y))`.
pub fn composed_product(p: &IntPolynomial, q: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() || q.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let (m, n) = (p.degree(), q.degree());
    if m == 0 || n == 0 {
        return Ok(IntPolynomial::one());
    }
    let qc = q.coeffs();
    Ok(interpolate_from(m * n, |x0| {
        // y^n Q(x0 / y) = sum_k q_k x0^k y^(n-k)
        let mut pw = BigInt::one();
        let mut qy = alloc::vec![BigInt::zero(); n + 1];
        for (k, c) in qc.iter().enumerate() {
            qy[n - k] = c * &pw;
            pw *= x0;
        }
        resultant_z(p.coeffs(), &qy)
    }))
}

/// Polynomial of degree `deg P * deg Q` whose roots are the sums
/// `alpha_i + beta_j`, computed as `Res_y(P(y), Q(x - y))`.
pub fn composed_sum(p: &IntPolynomial, q: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (p.degree(), q.degree());
    if m == 0 || n == 0 {
        return Ok(IntPolynomial::one());
    }
    let qc = q.to_rational();
    Ok(interpolate_from(m * n, |x0| {
        // Q(x0 - y) expanded in y
        let shift = alloc::vec![BigRational::from_integer(x0.clone()), -BigRational::one()];
        let mut acc: QVec = Vec::new();
        for c in qc.iter().rev() {
            acc = qx::add(&qx::mul(&acc, &shift), &qx::constant(c.clone()));
        }
        let qy: Vec<BigInt> = acc.iter().map(|c| c.to_integer()).collect();
        resultant_z(p.coeffs(), &qy)
    }))
}

/// Power sums `p_1..=p_k` of the roots of `P` (with multiplicity).
pub(crate) fn power_sums(p: &IntPolynomial, k: usize) -> Vec<BigRational> {
    let d = p.degree();
    let lc = BigRational::from_integer(p.leading());
    // monic coefficients c_0..c_{d-1}
    let c: Vec<BigRational> = p.coeffs()[..d].iter().map(|x| BigRational::from_integer(x.clone()) / &lc).collect();
    let mut ps: Vec<BigRational> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut s = BigRational::zero();
        for i in 1..j.min(d + 1) {
            s += &c[d - i] * &ps[j - i - 1];
        }
        if j <= d {
            s += &c[d - j] * BigRational::from_integer(BigInt::from(j));
        }
        ps.push(-s);
    }
    ps
}

/// Monic polynomial of degree `d` with the given power sums `p_1..=p_d`.
pub(crate) fn from_power_sums(ps: &[BigRational], d: usize) -> QVec {
    let mut c = alloc::vec![BigRational::zero(); d + 1];
    c[d] = BigRational::one();
    for k in 1..=d {
        let mut s = ps[k - 1].clone();
        for i in 1..k {
            s += &c[d - i] * &ps[k - i - 1];
        }
        c[d - k] = -s / BigRational::from_integer(BigInt::from(k));
    }
    c
}

/// Polynomial whose roots are `alpha_i^e` for the roots of `P`, `e >= 1`.
pub fn power_poly(p: &IntPolynomial, e: usize) -> IntPolynomial {
    let d = p.degree();
    if d == 0 || e == 1 {
        return p.clone();
    }
    let ps = power_sums(p, d * e);
    let sub: Vec<BigRational> = (1..=d).map(|k| ps[k * e - 1].clone()).collect();
    IntPolynomial::from_rational(&from_power_sums(&sub, d))
}

/// Power-sum route to the composed product, used as an independent check.
#[cfg(test)]
pub(crate) fn composed_product_by_traces(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let d = p.degree() * q.degree();
    let a = power_sums(p, d);
    let b = power_sums(q, d);
    let ab: Vec<BigRational> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
    IntPolynomial::from_rational(&from_power_sums(&ab, d))
}

#[cfg(test)]
pub(crate) fn composed_sum_by_traces(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    use num_integer::binomial;
    let (m, n) = (p.degree(), q.degree());
    let d = m * n;
    let mut a = alloc::vec![BigRational::from_integer(BigInt::from(m))];
    a.extend(power_sums(p, d));
    let mut b = alloc::vec![BigRational::from_integer(BigInt::from(n))];
    b.extend(power_sums(q, d));
    let s: Vec<BigRational> = (1..=d)
        .map(|k| {
            (0..=k)
                .map(|i| BigRational::from_integer(binomial(BigInt::from(k), BigInt::from(i))) * &a[i] * &b[k - i])
                .fold(BigRational::zero(), |x, y| x + y)
        })
        .collect();
    IntPolynomial::from_rational(&from_power_sums(&s, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    fn p(s: &str) -> IntPolynomial {
        parse_poly(s).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(composed_product(&p("x^2-2"), &p("x^2-3")).unwrap(), p("x^2-6").pow(2));
        assert_eq!(composed_product(&p("x-2"), &p("x-3")).unwrap(), p("x-6"));
        let l = p("x^2-3x+1");
        assert_eq!(composed_product(&l, &l).unwrap(), p("x-1").pow(2).mul(&p("x^2-7x+1")));
        assert_eq!(composed_product(&p("x"), &l), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn sums() {
        assert_eq!(composed_sum(&p("x^2-2"), &p("x^2-3")).unwrap(), p("x^4-10x^2+1"));
        assert_eq!(composed_sum(&p("x-1"), &p("x-1")).unwrap(), p("x-2"));
        assert_eq!(composed_sum(&p("x^2+1"), &p("x")).unwrap(), p("x^2+1"));
    }

    #[test]
    fn trace_route_agrees() {
        for (a, b) in [("x^3-x-1", "2x^2+x-3"), ("x^4-x^3-x^2-x+1", "x^2-5"), ("3x^2-1", "x^3+2x+7")] {
            assert_eq!(composed_product(&p(a), &p(b)).unwrap(), composed_product_by_traces(&p(a), &p(b)));
            assert_eq!(composed_sum(&p(a), &p(b)).unwrap(), composed_sum_by_traces(&p(a), &p(b)));
        }
    }

    #[test]
    fn powers() {
        assert_eq!(power_poly(&p("x^2-x-1"), 2), p("x^2-3x+1"));
        assert_eq!(power_poly(&p("x^2+x+1"), 3), p("x-1").pow(2));
        assert_eq!(power_poly(&p("2x-1"), 3), p("8x-1"));
    }
}
