//! Factorization over Z: squarefree decomposition, modular factorization,
//! quadratic Hensel lifting and subset recombination.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{self, FpVec};
use super::zx::{self, ZVec};
use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::limits;

fn small_odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZVec {
    zx::trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZVec {
    let half: BigInt = m >> 1;
    zx::trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZVec, ZVec) {
    let db = zx::degree(b).expect("nonzero");
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = alloc::vec![BigInt::zero(); r.len() - db];
    while let Some(dr) = zx::degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone();
        for j in 0..=db {
            r[dr - db + j] = (&r[dr - db + j] - &c * &b[j]).mod_floor(m);
        }
        q[dr - db] = c;
        r = zx::trim(r);
    }
    (zx::trim(q), r)
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZVec {
    reduce(&zx::mul(a, b), m)
}

fn lift_fp(a: &[u64]) -> ZVec {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` modulo `m`
/// to the same relations modulo `m^2`. `h` is monic.
fn hensel_step(f: &[BigInt], g: &mut ZVec, h: &mut ZVec, s: &mut ZVec, t: &mut ZVec, m: &BigInt) {
    let m2 = m * m;
    let e = reduce(&zx::sub(f, &zx::mul(g, h)), &m2);
    let (q, r) = divrem_monic(&zx::mul(s, &e), h, &m2);
    let g1 = reduce(&zx::add(&zx::add(g, &zx::mul(t, &e)), &zx::mul(&q, g)), &m2);
    let h1 = reduce(&zx::add(h, &r), &m2);
    let b = reduce(&zx::sub(&zx::add(&zx::mul(s, &g1), &zx::mul(t, &h1)), &zx::one()), &m2);
    let (c, d) = divrem_monic(&zx::mul(s, &b), &h1, &m2);
    let s1 = reduce(&zx::sub(s, &d), &m2);
    let t1 = reduce(&zx::sub(&zx::sub(t, &zx::mul(t, &b)), &zx::mul(&c, &g1)), &m2);
    *g = g1;
    *h = h1;
    *s = s1;
    *t = t1;
}

/// Lifts `f = lc(f) prod factors (mod p)` to monic factors modulo `p^(2^k)`.
fn hensel_tree(f: &[BigInt], factors: &[FpVec], p: u64, k: u32) -> Vec<ZVec> {
    let pb = BigInt::from(p);
    let target = {
        let mut m = pb.clone();
        for _ in 0..k {
            m = &m * &m;
        }
        m
    };
    if factors.len() == 1 {
        let lc = f.last().unwrap().clone();
        let inv = lc.modinv(&target).expect("lc invertible");
        return alloc::vec![reduce(&zx::scale(f, &inv), &target)];
    }
    let mid = factors.len() / 2;
    let lc_p = modp::from_z(&[f.last().unwrap().clone()], p)[0];
    let mut g0: FpVec = alloc::vec![lc_p];
    for u in &factors[..mid] {
        g0 = modp::mul(&g0, u, p);
    }
    let mut h0: FpVec = alloc::vec![1];
    for u in &factors[mid..] {
        h0 = modp::mul(&h0, u, p);
    }
    let (s0, t0) = modp::ext_gcd(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (lift_fp(&g0), lift_fp(&h0), lift_fp(&s0), lift_fp(&t0));
    let mut m = pb;
    for _ in 0..k {
        hensel_step(f, &mut g, &mut h, &mut s, &mut t, &m);
        m = &m * &m;
    }
    let mut out = hensel_tree(&g, &factors[..mid], p, k);
    out.extend(hensel_tree(&h, &factors[mid..], p, k));
    out
}

/// Subset sums of factor degrees.
fn degree_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::new();
    s.insert(0);
    for &d in degs {
        let cur: Vec<usize> = s.iter().copied().collect();
        for c in cur {
            s.insert(c + d);
        }
    }
    s
}

/// Factors a primitive squarefree polynomial with nonzero constant term.
fn factor_squarefree(f: &[BigInt]) -> Vec<ZVec> {
    let n = zx::degree(f).unwrap_or(0);
    if n <= 1 {
        return alloc::vec![f.to_vec()];
    }
    let lc = f[n].clone();
    // choose the prime with the fewest modular factors among several
    let mut best: Option<(u64, Vec<FpVec>)> = None;
    let mut possible: BTreeSet<usize> = (0..=n).collect();
    let mut tried = 0;
    for p in small_odd_primes().take(400) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::from_z(f, p);
        if modp::degree(&fp) != Some(n) || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let fs = modp::factor_squarefree(&fp, p);
        if fs.len() == 1 {
            return alloc::vec![f.to_vec()];
        }
        let degs: Vec<usize> = fs.iter().map(|u| u.len() - 1).collect();
        let sums = degree_sums(&degs);
        possible = possible.intersection(&sums).copied().collect();
        if possible.len() <= 2 {
            // only 0 and n remain
            return alloc::vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, fs) = best.expect("some prime is admissible for a squarefree polynomial");
    // any factor has coefficients below 2^n |f|_2; the lc-scaled version
    // below lc times that
    let bound: BigInt = lc.abs() * (BigInt::one() << n) * zx::norm2_ceil(f);
    let need = bound * 2u32 + 1u32;
    let pb = BigInt::from(p);
    let mut k = 0u32;
    let mut m = pb.clone();
    while m <= need {
        m = &m * &m;
        k += 1;
    }
    let lifted = hensel_tree(f, &fs, p, k);
    recombine(f, lifted, &m, &possible)
}

fn recombine(f: &[BigInt], lifted: Vec<ZVec>, m: &BigInt, possible: &BTreeSet<usize>) -> Vec<ZVec> {
    let mut f = f.to_vec();
    let mut rest = lifted;
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= rest.len() {
        let r = rest.len();
        let lc = f.last().unwrap().clone();
        let target0 = (&lc * &f[0]).abs();
        // iterate subsets of size s in lexicographic order
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| rest[i].len() - 1).sum();
            if possible.contains(&deg) {
                let mut c0 = lc.clone();
                for &i in &idx {
                    c0 = (c0 * &rest[i][0]).mod_floor(m);
                }
                let c0 = symmetric(&[c0], m).pop().unwrap_or_default();
                if !c0.is_zero() && (&target0 % c0.abs()).is_zero() {
                    let mut g: ZVec = alloc::vec![lc.clone()];
                    for &i in &idx {
                        g = mul_mod(&g, &rest[i], m);
                    }
                    let g = zx::primitive(&symmetric(&g, m));
                    if let Some(q) = zx::div_exact(&f, &g) {
                        out.push(g);
                        f = zx::primitive(&q);
                        let mut keep = Vec::new();
                        for (i, u) in rest.into_iter().enumerate() {
                            if !idx.contains(&i) {
                                keep.push(u);
                            }
                        }
                        rest = keep;
                        continue 'outer;
                    }
                }
            }
            // next combination
            let mut i = s;
            loop {
                if i == 0 {
                    s += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < r - s + i {
                    idx[i] += 1;
                    for j in i + 1..s {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if zx::degree(&f).unwrap_or(0) > 0 {
        out.push(f);
    }
    out
}

fn sort_factors(v: &mut [(IntPolynomial, usize)]) {
    v.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
}

/// Factorization without the degree cap, for internal callers that have
/// already bounded their inputs.
pub(crate) fn factor_unchecked(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let mut out: Vec<(IntPolynomial, usize)> = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let mut q = part.coeffs().to_vec();
        if q[0].is_zero() {
            out.push((IntPolynomial::x(), mult));
            q.remove(0);
        }
        if zx::degree(&q).unwrap_or(0) == 0 {
            continue;
        }
        for g in factor_squarefree(&q) {
            out.push((IntPolynomial::from_coeffs(g), mult));
        }
    }
    sort_factors(&mut out);
    out
}

/// Complete factorization into irreducible primitive factors with
/// multiplicities, sorted by degree and then coefficients. The product of
/// the factors equals `p` up to sign.
pub fn factor_over_integers(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let limit = limits::factor_degree_cap();
    if p.degree() > limit {
        return Err(Error::DegreeLimit { degree: p.degree(), limit });
    }
    Ok(factor_unchecked(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    fn p(s: &str) -> IntPolynomial {
        parse_poly(s).unwrap()
    }

    fn check_roundtrip(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
        let fs = factor_over_integers(f).unwrap();
        let mut prod = IntPolynomial::one();
        for (g, m) in &fs {
            prod = prod.mul(&g.pow(*m));
        }
        assert_eq!(&prod, f);
        fs
    }

    #[test]
    fn documented_cases() {
        assert_eq!(check_roundtrip(&p("x^2-6").pow(2)), alloc::vec![(p("x^2-6"), 2)]);
        assert_eq!(check_roundtrip(&p("x^4-10x^2+1")), alloc::vec![(p("x^4-10x^2+1"), 1)]);
        assert_eq!(check_roundtrip(&p("x^2-1")), alloc::vec![(p("x-1"), 1), (p("x+1"), 1)]);
    }

    #[test]
    fn non_monic_and_zero_roots() {
        let f = p("6x^2+x-1").mul(&p("x")).mul(&p("3x^3-x+7")).mul(&p("x^2+1").pow(3));
        let fs = check_roundtrip(&f);
        assert_eq!(fs, alloc::vec![(p("3x-1"), 1), (p("x"), 1), (p("2x+1"), 1), (p("x^2+1"), 3), (p("3x^3-x+7"), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // minimal polynomial of sqrt2+sqrt3+sqrt5 splits into many factors mod every prime
        let a = crate::intpoly::composed_sum(&p("x^4-10x^2+1"), &p("x^2-5")).unwrap();
        assert_eq!(check_roundtrip(&a).len(), 1);
        let b = a.mul(&p("x^8-x^4+1"));
        assert_eq!(check_roundtrip(&b).len(), 2);
    }

    #[test]
    fn degree_limit() {
        let big = IntPolynomial::from_coeffs((0..70).map(|_| BigInt::one()).collect());
        assert!(matches!(factor_over_integers(&big), Err(Error::DegreeLimit { .. })));
    }
}
