//! Dense polynomials over GF(p) for word-sized odd primes, and their
//! factorization by distinct-degree and equal-degree splitting.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive};

pub type FpVec = Vec<u64>;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut t, mut nt) = (0i128, 1i128);
    let (mut r, mut nr) = (p as i128, (a % p) as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    t.rem_euclid(p as i128) as u64
}

pub fn trim(mut a: FpVec) -> FpVec {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn from_z(a: &[BigInt], p: u64) -> FpVec {
    let pb = BigInt::from(p);
    trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpVec {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpVec {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u128; a.len() + b.len() - 1];
    let p2 = (p as u128) * (p as u128);
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let v = r[i + j] + x as u128 * y as u128;
            r[i + j] = if v >= p2 { v - p2 } else { v };
        }
    }
    trim(r.into_iter().map(|v| (v % p as u128) as u64).collect())
}

pub fn scale(a: &[u64], k: u64, p: u64) -> FpVec {
    trim(a.iter().map(|&c| mulm(c, k, p)).collect())
}

pub fn monic(a: &[u64], p: u64) -> FpVec {
    match degree(a) {
        None => Vec::new(),
        Some(d) => scale(a, inv(a[d], p), p),
    }
}

pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpVec, FpVec) {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mulm(r[dr], li, p);
        for j in 0..=db {
            let t = mulm(c, b[j], p);
            r[dr - db + j] = (r[dr - db + j] + p - t) % p;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpVec {
    divrem(a, b, p).1
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpVec {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (FpVec, FpVec) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1): (FpVec, FpVec) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpVec, FpVec) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    let d = degree(&r0).expect("nonzero gcd");
    debug_assert_eq!(d, 0, "inputs not coprime");
    let k = inv(r0[0], p);
    (scale(&s0, k, p), scale(&t0, k, p))
}

pub fn derivative(a: &[u64], p: u64) -> FpVec {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulm(c, i as u64 % p, p)).collect())
}

/// `b^e mod m`.
pub fn powmod(b: &[u64], e: &BigInt, m: &[u64], p: u64) -> FpVec {
    let mut acc: FpVec = rem(&[1], m, p);
    let base = rem(b, m, p);
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &base, p), m, p);
        }
    }
    acc
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    let d = derivative(a, p);
    if d.is_empty() {
        return degree(a).unwrap_or(0) == 0;
    }
    degree(&gcd(a, &d, p)) == Some(0)
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(g, d)` where `g` is the product of all degree-`d` factors.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(FpVec, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x: FpVec = vec![0, 1];
    let pb = BigInt::from(p);
    let mut h = rem(&x, &f, p);
    let mut d = 0;
    while degree(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(&h, &pb, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if degree(&g).unwrap_or(0) > 0 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if let Some(df) = degree(&f) {
        if df > 0 {
            out.push((f, df));
        }
    }
    out
}

/// Deterministic xorshift generator for the random splitting polynomials.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Cantor-Zassenhaus splitting of a product of degree-`d` monic factors.
pub fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut XorShift) -> Vec<FpVec> {
    let n = degree(g).unwrap_or(0);
    if n == d {
        return vec![g.to_vec()];
    }
    let e = (Pow::pow(BigInt::from(p), d as u32) - BigInt::one()) / 2u32;
    loop {
        let a: FpVec = trim((0..n).map(|_| rng.next() % p).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = sub(&powmod(&a, &e, g, p), &[1], p);
        let s = gcd(&b, g, p);
        let ds = degree(&s).unwrap_or(0);
        if ds > 0 && ds < n {
            let t = divrem(g, &s, p).0;
            let mut out = equal_degree(&s, d, p, rng);
            out.extend(equal_degree(&monic(&t, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial, sorted.
pub fn factor_squarefree(f: &[u64], p: u64) -> Vec<FpVec> {
    let f = monic(f, p);
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15 ^ p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f, p) {
        out.extend(equal_degree(&g, d, p, &mut rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
