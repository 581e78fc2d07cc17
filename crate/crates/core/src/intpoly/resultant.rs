use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::zx;
use super::IntPolynomial;
use crate::error::{Error, Result};

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Resultant of raw coefficient vectors, `lc(p)^deg q * prod q(alpha)`
/// over the roots `alpha` of `p`.
pub(crate) fn resultant_z(p: &[BigInt], q: &[BigInt]) -> BigInt {
    let m = zx::degree(p).expect("nonzero");
    let n = zx::degree(q).expect("nonzero");
    if m == 0 {
        return Pow::pow(&p[0], n as u32);
    }
    if n == 0 {
        return Pow::pow(&q[0], m as u32);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in p[..=m].iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in q[..=n].iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det_bareiss(rows)
}

/// `Res(P, Q)` as the Sylvester determinant.
pub fn resultant(p: &IntPolynomial, q: &IntPolynomial) -> Result<BigInt> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(resultant_z(p.coeffs(), q.coeffs()))
}
