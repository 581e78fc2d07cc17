use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::factor::factor_unchecked;
use super::{zx, IntPolynomial};
use crate::error::{Error, Result};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

/// The `n`-th cyclotomic polynomial, `n >= 1`.
pub fn cyclotomic_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num: Vec<BigInt> = alloc::vec![BigInt::from(0); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = zx::div_exact(&num, phi_d.coeffs()).expect("cyclotomic divisor");
        }
    }
    IntPolynomial::from_coeffs(num)
}

/// Whether the monic `p` divides `x^n - 1`.
fn divides_xn_minus_1(p: &IntPolynomial, n: u64) -> bool {
    // x^n mod p by repeated multiplication by x
    let d = p.degree();
    let c = p.coeffs();
    let mut r: Vec<BigInt> = alloc::vec![BigInt::from(0); d];
    if d == 0 {
        return false;
    }
    r[0] = BigInt::one();
    for _ in 0..n {
        let top = r[d - 1].clone();
        for k in (1..d).rev() {
            r[k] = &r[k - 1] - &top * &c[k];
        }
        r[0] = -&top * &c[0];
    }
    r[0] -= 1;
    r.iter().all(|x| x == &BigInt::from(0))
}

/// Least `n` with `p` dividing `x^n - 1`, for `p` already known to be monic
/// and irreducible.
pub(crate) fn cyclotomic_index(p: &IntPolynomial) -> Option<u64> {
    let d = p.degree() as u64;
    if d == 0 || !p.is_monic() {
        return None;
    }
    // phi(n) >= sqrt(n/2), so phi(n) = d forces n <= 2 d^2
    (1..=2 * d * d + 2).filter(|&n| euler_phi(n) == d).find(|&n| divides_xn_minus_1(p, n))
}

/// `Some(n)` exactly when `p = Phi_n`.
pub fn is_cyclotomic(p: &IntPolynomial) -> Result<Option<u64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let fs = factor_unchecked(p);
    if fs.len() != 1 || fs[0].1 != 1 {
        return Err(Error::Reducible);
    }
    Ok(cyclotomic_index(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), parse_poly("x-1").unwrap());
        assert_eq!(cyclotomic_poly(12), parse_poly("x^4-x^2+1").unwrap());
        assert_eq!(cyclotomic_poly(15), parse_poly("x^8-x^7+x^5-x^4+x^3-x+1").unwrap());
    }

    #[test]
    fn detection() {
        assert_eq!(is_cyclotomic(&parse_poly("x^4-x^2+1").unwrap()), Ok(Some(12)));
        assert_eq!(is_cyclotomic(&parse_poly("x^2-3x+1").unwrap()), Ok(None));
        assert_eq!(is_cyclotomic(&parse_poly("x+1").unwrap()), Ok(Some(2)));
        assert_eq!(is_cyclotomic(&parse_poly("x-1").unwrap()), Ok(Some(1)));
        assert_eq!(is_cyclotomic(&parse_poly("2x-1").unwrap()), Err(Error::NotMonic));
        assert_eq!(is_cyclotomic(&parse_poly("x^2-1").unwrap()), Err(Error::Reducible));
        for n in 1..60 {
            assert_eq!(cyclotomic_index(&cyclotomic_poly(n)), Some(n));
        }
    }
}
