//! Dense polynomials over Q, ascending order.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::zx::{self, ZVec};

pub type QVec = Vec<BigRational>;

pub fn trim(mut p: QVec) -> QVec {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn from_z(p: &[BigInt]) -> QVec {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

pub fn constant(c: BigRational) -> QVec {
    trim(vec![c])
}

pub fn x() -> QVec {
    vec![BigRational::zero(), BigRational::one()]
}

/// Common denominator `d` and integer numerators with `p = num / d`.
pub fn clear_denominators(p: &[BigRational]) -> (ZVec, BigInt) {
    let mut d = BigInt::one();
    for c in p {
        d = d.lcm(c.denom());
    }
    let num = p.iter().map(|c| (c * BigRational::from_integer(d.clone())).to_integer()).collect();
    (zx::trim(num), d)
}

/// Primitive integer polynomial proportional to `p`.
pub fn to_primitive_z(p: &[BigRational]) -> ZVec {
    zx::primitive(&clear_denominators(p).0)
}

pub fn add(a: &[BigRational], b: &[BigRational]) -> QVec {
    let n = a.len().max(b.len());
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        r.push(x + y);
    }
    trim(r)
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> QVec {
    add(a, &neg(b))
}

pub fn neg(a: &[BigRational]) -> QVec {
    a.iter().map(|c| -c).collect()
}

pub fn scale(a: &[BigRational], k: &BigRational) -> QVec {
    trim(a.iter().map(|c| c * k).collect())
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> QVec {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

/// Euclidean division; panics on a zero divisor.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (QVec, QVec) {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let lb_inv = b[db].recip();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lb_inv;
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            let t = &c * bj;
            r[dr - db + j] -= t;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[BigRational], b: &[BigRational]) -> QVec {
    divrem(a, b).1
}

pub fn monic(a: &[BigRational]) -> QVec {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = a[d].recip();
            scale(a, &inv)
        }
    }
}

/// Monic gcd.
pub fn gcd(a: &[BigRational], b: &[BigRational]) -> QVec {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// `(g, s)` with `g = gcd(a, m)` monic and `s a = g mod m`.
pub fn ext_gcd_inv(a: &[BigRational], m: &[BigRational]) -> (QVec, QVec) {
    let mut r0 = trim(m.to_vec());
    let mut r1 = rem(a, m);
    let mut s0: QVec = Vec::new();
    let mut s1: QVec = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let d = degree(&r0).map(|d| r0[d].clone()).unwrap_or_else(BigRational::one);
    let inv = d.recip();
    (scale(&r0, &inv), rem(&scale(&s0, &inv), m))
}

pub fn eval(a: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(a: &[BigRational]) -> QVec {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
}

/// `a(b(x)) mod m`, by Horner.
pub fn compose_mod(a: &[BigRational], b: &[BigRational], m: &[BigRational]) -> QVec {
    let mut acc: QVec = Vec::new();
    for c in a.iter().rev() {
        acc = rem(&add(&mul(&acc, b), &constant(c.clone())), m);
    }
    acc
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> QVec {
    let n = xs.len();
    let mut coef: Vec<BigRational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num / den;
        }
    }
    let mut p: QVec = Vec::new();
    for i in (0..n).rev() {
        // p = p * (x - xs[i]) + coef[i]
        let shifted = mul(&p, &[-xs[i].clone(), BigRational::one()]);
        p = add(&shifted, &constant(coef[i].clone()));
    }
    p
}
