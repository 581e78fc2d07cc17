//! Raw dense polynomials over Z, ascending order, no normalization.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZVec = Vec<BigInt>;

pub fn trim(mut p: ZVec) -> ZVec {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> ZVec {
    let n = a.len().max(b.len());
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        r.push(x + y);
    }
    trim(r)
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> ZVec {
    let n = a.len().max(b.len());
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        r.push(x - y);
    }
    trim(r)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZVec {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
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

pub fn scale(a: &[BigInt], k: &BigInt) -> ZVec {
    trim(a.iter().map(|c| c * k).collect())
}

pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> ZVec {
    let a = trim(a.to_vec());
    if a.is_empty() {
        return a;
    }
    let mut g = content(&a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.into_iter().map(|c| c / &g).collect()
}

pub fn derivative(a: &[BigInt]) -> ZVec {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// `a / b` when `b` divides `a` exactly over Z, else `None`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZVec> {
    let db = degree(b)?;
    let mut r = trim(a.to_vec());
    if r.is_empty() {
        return Some(r);
    }
    let da = r.len() - 1;
    if da < db {
        return None;
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &r[k + db];
        if c.is_zero() {
            continue;
        }
        let (qq, rem) = c.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            r[k + j] -= &qq * bj;
        }
        q[k] = qq;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(q))
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(da-db+1) a mod b`.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> ZVec {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let lb = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone();
        r = r.iter().map(|x| x * &lb).collect();
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            r[dr - db + j] -= &c * bj;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd with positive leading coefficient.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> ZVec {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// Yun's squarefree decomposition of a primitive polynomial:
/// `a = prod f_i^i` with each `f_i` squarefree and pairwise coprime.
pub fn squarefree_decomposition(a: &[BigInt]) -> Vec<(ZVec, usize)> {
    let a = primitive(a);
    let mut out = Vec::new();
    if degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    let da = derivative(&a);
    let mut c = gcd(&a, &da);
    let mut w = div_exact(&a, &c).expect("gcd divides");
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(&w, &c);
        let z = div_exact(&w, &y).expect("gcd divides");
        if degree(&z).unwrap_or(0) > 0 {
            out.push((primitive(&z), i));
        }
        c = div_exact(&c, &y).expect("gcd divides");
        w = y;
        i += 1;
    }
    out
}

pub fn one() -> ZVec {
    vec![BigInt::one()]
}

/// `p(x) -> p(-x)`.
pub fn negate_var(a: &[BigInt]) -> ZVec {
    a.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect()
}

/// `x^deg p(1/x)`.
pub fn reverse(a: &[BigInt]) -> ZVec {
    let mut r = trim(a.to_vec());
    r.reverse();
    trim(r)
}

pub fn max_abs(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Ceiling of the Euclidean norm.
pub fn norm2_ceil(a: &[BigInt]) -> BigInt {
    let s: BigInt = a.iter().map(|c| c * c).sum();
    let r = s.sqrt();
    if &r * &r == s {
        r
    } else {
        r + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZVec {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_products() {
        let a = mul(&z(&[-1, 1]), &z(&[2, 0, 1]));
        let b = mul(&z(&[-1, 1]), &z(&[3, 1]));
        assert_eq!(gcd(&a, &b), z(&[-1, 1]));
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (x-1)^3 (x+2)
        let mut p = z(&[2, 1]);
        for _ in 0..3 {
            p = mul(&p, &z(&[-1, 1]));
        }
        let d = squarefree_decomposition(&p);
        assert_eq!(d, vec![(z(&[2, 1]), 1), (z(&[-1, 1]), 3)]);
    }

    #[test]
    fn exact_division() {
        let p = mul(&z(&[1, 2]), &z(&[3, 0, 5]));
        assert_eq!(div_exact(&p, &z(&[1, 2])), Some(z(&[3, 0, 5])));
        assert_eq!(div_exact(&p, &z(&[1, 3])), None);
    }
}
