//! Certified complex root isolation.
//!
//! Approximations come from Aberth iteration in multiprecision dyadic
//! arithmetic. They are certified with the Gerschgorin-type inclusion for
//! the Weierstrass corrections: for a squarefree `P` of degree `n` with
//! approximations `z_i`, the disks `D(z_i, n |W_i|)`, where
//! `W_i = P(z_i) / (lc(P) prod_{j != i} (z_i - z_j))`, cover the roots and
//! every connected component made of `k` disks holds exactly `k` roots.
//! Single roots are then refined with the Krawczyk operator.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::zx;
use super::IntPolynomial;
use crate::arith::{CDyadic, CInterval, Dyadic, Interval, Round};

/// A closed disk with rational center and positive rational radius that
/// contains exactly one root of its polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootBox {
    pub re: BigRational,
    pub im: BigRational,
    pub radius: BigRational,
}

impl RootBox {
    pub fn new(re: BigRational, im: BigRational, radius: BigRational) -> Self {
        RootBox { re, im, radius }
    }

    /// Centers on the real axis enclose real roots of real polynomials.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> RootBox {
        RootBox { re: self.re.clone(), im: -self.im.clone(), radius: self.radius.clone() }
    }

    pub fn contains(&self, re: &BigRational, im: &BigRational) -> bool {
        let dr = re - &self.re;
        let di = im - &self.im;
        &dr * &dr + &di * &di <= &self.radius * &self.radius
    }

    pub fn intersects(&self, other: &RootBox) -> bool {
        let dr = &other.re - &self.re;
        let di = &other.im - &self.im;
        let s = &self.radius + &other.radius;
        &dr * &dr + &di * &di <= &s * &s
    }

    /// `other` lies inside `self`.
    pub fn contains_box(&self, other: &RootBox) -> bool {
        if other.radius > self.radius {
            return false;
        }
        let dr = &other.re - &self.re;
        let di = &other.im - &self.im;
        let s = &self.radius - &other.radius;
        &dr * &dr + &di * &di <= &s * &s
    }

    /// Rectangle enclosing the disk.
    pub fn enclosure(&self, prec: u32) -> CInterval {
        let r = Interval::from_rational(&self.radius, prec).hi;
        let re = Interval::from_rational(&self.re, prec);
        let im = if self.im.is_zero() { Interval::zero() } else { Interval::from_rational(&self.im, prec) };
        if self.im.is_zero() {
            // the root is real
            return CInterval::new(Interval::new(re.lo.sub(&r), re.hi.add(&r)), Interval::zero());
        }
        CInterval::new(Interval::new(re.lo.sub(&r), re.hi.add(&r)), Interval::new(im.lo.sub(&r), im.hi.add(&r)))
    }

    fn from_disk(d: &Disk) -> RootBox {
        RootBox { re: d.c.re.to_rational(), im: d.c.im.to_rational(), radius: d.r.to_rational() }
    }

    /// Smallest `k` with `radius <= 2^-k`, saturating at 0.
    pub fn radius_bits(&self) -> u32 {
        let mut k = 0u32;
        let mut t = BigRational::from_integer(BigInt::from(1));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        while self.radius <= &t * &half && k < 1 << 20 {
            t = &t * &half;
            k += 1;
        }
        k
    }
}

#[derive(Clone, Debug)]
struct Disk {
    c: CDyadic,
    r: Dyadic,
}

fn to_dyadic(p: &[BigInt]) -> Vec<Dyadic> {
    p.iter().map(|c| Dyadic::from_int(c.clone())).collect()
}

/// Value and derivative at `z`, approximately, `prec` bits per operation.
fn horner(p: &[Dyadic], z: &CDyadic, prec: u32) -> (CDyadic, CDyadic) {
    let mut v = CDyadic::zero();
    let mut d = CDyadic::zero();
    for c in p.iter().rev() {
        d = d.mul(z, prec).add(&v).round(prec);
        v = v.mul(z, prec).add(&CDyadic::real(c.clone())).round(prec);
    }
    (v, d)
}

fn horner_interval(p: &[Dyadic], z: &CInterval, prec: u32) -> CInterval {
    let mut v = CInterval::zero();
    for c in p.iter().rev() {
        v = v.mul(z, prec).add(&CInterval::real(Interval::point(c.clone())), prec);
    }
    v
}

/// Interval evaluation of `p` on a rectangle.
pub(crate) fn eval_rect(p: &IntPolynomial, z: &CInterval, prec: u32) -> CInterval {
    horner_interval(&to_dyadic(p.coeffs()), z, prec)
}

/// Initial approximations on circles given by the upper Newton polygon of
/// `log2 |a_k|`.
fn initial_points(p: &[BigInt]) -> Vec<CDyadic> {
    let n = p.len() - 1;
    let pts: Vec<(usize, f64)> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, Dyadic::from_int(c.clone()).log2_abs()))
        .collect();
    // upper convex hull
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (k1, y1) = hull[hull.len() - 2];
            let (k2, y2) = hull[hull.len() - 1];
            let cross = (k2 as f64 - k1 as f64) * (pt.1 - y1) - (y2 - y1) * (pt.0 as f64 - k1 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut out = Vec::with_capacity(n);
    let two_pi = 2.0 * core::f64::consts::PI;
    for w in hull.windows(2) {
        let (k1, y1) = w[0];
        let (k2, y2) = w[1];
        let m = k2 - k1;
        let log_r = (y1 - y2) / m as f64;
        let r = Dyadic::from_log2(log_r);
        for j in 0..m {
            let ang = two_pi * j as f64 / m as f64 + two_pi * k1 as f64 / n as f64 + 0.4;
            let re = Dyadic::from_f64(libm::cos(ang)).mul(&r).round(60, Round::Nearest);
            let im = Dyadic::from_f64(libm::sin(ang)).mul(&r).round(60, Round::Nearest);
            out.push(CDyadic::new(re, im));
        }
    }
    out
}

/// Aberth iteration until the relative corrections fall below about
/// `2^-(prec-12)` or the iteration budget runs out.
fn aberth(p: &[Dyadic], z: &mut [CDyadic], prec: u32, budget: usize) {
    let n = z.len();
    for _ in 0..budget {
        let mut worst = f64::NEG_INFINITY;
        for i in 0..n {
            let (v, d) = horner(p, &z[i], prec);
            if v.is_zero() {
                continue;
            }
            let Some(ratio) = v.div(&d, prec) else {
                // stationary point: nudge
                let eps = Dyadic::pow2(-(prec as i64) / 2);
                z[i] = z[i].add(&CDyadic::new(eps.clone(), eps));
                worst = f64::INFINITY;
                continue;
            };
            let mut s = CDyadic::zero();
            let mut clash = false;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let diff = z[i].sub(&z[j]);
                match CDyadic::real(Dyadic::one()).div(&diff, prec) {
                    Some(q) => s = s.add(&q).round(prec),
                    None => clash = true,
                }
            }
            if clash {
                let eps = Dyadic::pow2(-(prec as i64) / 2);
                z[i] = z[i].add(&CDyadic::new(eps.clone(), eps.neg()));
                worst = f64::INFINITY;
                continue;
            }
            let denom = CDyadic::real(Dyadic::one()).sub(&ratio.mul(&s, prec));
            let w = ratio.div(&denom, prec).unwrap_or(ratio);
            z[i] = z[i].sub(&w).round(prec);
            let scale = z[i].log2_abs().max(0.0);
            let rel = w.log2_abs() - scale;
            if rel > worst {
                worst = rel;
            }
        }
        if worst < -(prec as f64) + 12.0 {
            break;
        }
    }
}

/// Rational `c` with `P(2c - x) = +-P(x)`, when it is dyadic.
fn symmetry_axis(p: &[BigInt]) -> Option<Dyadic> {
    let n = p.len() - 1;
    if n < 2 {
        return None;
    }
    let c = BigRational::new(-p[n - 1].clone(), p[n].clone() * BigInt::from(n));
    let cd = Dyadic::from_rational_exact(&c)?;
    // Q(x) = P(2c - x)
    let two_c = &c + &c;
    let q = {
        let shift = vec![two_c, -BigRational::from_integer(BigInt::from(1))];
        let mut acc: Vec<BigRational> = Vec::new();
        for coef in p.iter().rev() {
            acc = super::qx::add(
                &super::qx::mul(&acc, &shift),
                &super::qx::constant(BigRational::from_integer(coef.clone())),
            );
        }
        acc
    };
    let pq = super::qx::from_z(p);
    if q == pq || super::qx::neg(&q) == pq {
        Some(cd)
    } else {
        None
    }
}

/// Copy of the approximations with exact conjugate (and, if present,
/// axis) symmetry imposed.
fn symmetrize(z: &[CDyadic], axis: Option<&Dyadic>) -> Vec<CDyadic> {
    let mut z = z.to_vec();
    let n = z.len();
    let dist2 = |a: &CDyadic, b: &CDyadic| a.sub(b).norm_sqr();
    let mut used = vec![false; n];
    let mut partner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if used[i] || !z[i].im.is_positive() {
            continue;
        }
        let target = z[i].conj();
        let best = (0..n)
            .filter(|&j| !used[j] && j != i && z[j].im.is_negative())
            .min_by(|&a, &b| dist2(&z[a], &target).cmp(&dist2(&z[b], &target)));
        if let Some(j) = best {
            if dist2(&z[j], &target) < z[i].im.mul(&z[i].im) {
                let re = z[i].re.add(&z[j].re).mul_pow2(-1);
                let im = z[i].im.sub(&z[j].im).mul_pow2(-1);
                z[i] = CDyadic::new(re.clone(), im.clone());
                z[j] = CDyadic::new(re, im.neg());
                used[i] = true;
                used[j] = true;
                partner[i] = Some(j);
            }
        }
    }
    for i in 0..n {
        if !used[i] {
            z[i].im = Dyadic::zero();
        }
    }
    if let Some(c) = axis {
        // reflection z -> 2c - conj(z)
        let two_c = c.mul_pow2(1);
        let mut used = vec![false; n];
        for i in 0..n {
            if used[i] {
                continue;
            }
            let target = CDyadic::new(two_c.sub(&z[i].re), z[i].im.clone());
            let best = (0..n)
                .filter(|&j| !used[j])
                .min_by(|&a, &b| dist2(&z[a], &target).cmp(&dist2(&z[b], &target)))
                .unwrap();
            if best == i {
                z[i].re = c.clone();
                used[i] = true;
            } else {
                let d = z[i].re.sub(c);
                let e = c.sub(&z[best].re);
                let off = d.add(&e).mul_pow2(-1);
                z[i].re = c.add(&off);
                z[best].re = c.sub(&off);
                used[i] = true;
                used[best] = true;
            }
        }
        // the reflection pass may have broken the equal real parts of
        // conjugate pairs; re-impose them (this keeps the axis symmetry)
        for i in 0..n {
            if let Some(j) = partner[i] {
                let re = z[i].re.add(&z[j].re).mul_pow2(-1);
                z[i].re = re.clone();
                z[j].re = re;
            }
        }
    }
    z
}

/// Certified disks around the approximations, or `None` when they are not
/// yet separated or not yet small enough.
fn certify(p: &[Dyadic], lc: &BigInt, z: &[CDyadic], prec: u32, target: &Dyadic) -> Option<Vec<Disk>> {
    let n = z.len();
    let wp = prec + 16;
    let lc_i = CInterval::real(Interval::from_int(lc.clone()));
    let nd = Dyadic::from_int(n as i64);
    let mut disks = Vec::with_capacity(n);
    for i in 0..n {
        let zi = CInterval::point(&z[i]);
        let v = horner_interval(p, &zi, wp);
        let mut den = lc_i.clone();
        for j in 0..n {
            if j != i {
                den = den.mul(&CInterval::point(&z[i].sub(&z[j])), wp);
            }
        }
        let vabs = v.abs(wp);
        let dabs = den.abs(wp);
        if !dabs.lo.is_positive() {
            return None;
        }
        let mut r = vabs.hi.div(&dabs.lo, 32, Round::Up).mul(&nd);
        if r.is_zero() {
            r = target.mul_pow2(-2);
        }
        if r > *target {
            return None;
        }
        disks.push(Disk { c: z[i].clone(), r });
    }
    for i in 0..n {
        for j in i + 1..n {
            let d2 = disks[i].c.sub(&disks[j].c).norm_sqr();
            let s = disks[i].r.add(&disks[j].r).mul_pow2(1);
            if d2 <= s.mul(&s) {
                return None;
            }
        }
    }
    Some(disks)
}

fn cmp_dyadic_pair(a: &CDyadic, b: &CDyadic) -> Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

/// Every pair of disks whose real ranges overlap has exactly equal center
/// real parts, which the symmetrization only produces for roots with equal
/// real parts; so the center order is the order of the roots.
fn order_decided(disks: &[Disk]) -> bool {
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let (a, b) = (&disks[i], &disks[j]);
            if a.c.re == b.c.re {
                continue;
            }
            let gap = a.c.re.sub(&b.c.re).abs();
            if gap <= a.r.add(&b.r) {
                return false;
            }
        }
    }
    true
}

/// Isolates the roots of a squarefree polynomial with nonzero constant term.
fn isolate_squarefree(p: &[BigInt], bits: u32) -> Vec<Disk> {
    let n = p.len() - 1;
    let pd = to_dyadic(p);
    let lc = p[n].clone();
    let axis = symmetry_axis(p);
    let target = Dyadic::pow2(-(bits as i64));
    let mut z = initial_points(p);
    let mut prec = (bits + 32).max(64);
    let mut budget = 200 + 20 * n;
    // beyond this the order of roots with nearly equal real parts is
    // taken from the centers
    let order_cap = (bits + 64 * n as u32 + 512).max(2048);
    loop {
        aberth(&pd, &mut z, prec, budget);
        let sym = symmetrize(&z, axis.as_ref());
        if let Some(disks) = certify(&pd, &lc, &sym, prec, &target) {
            if order_decided(&disks) || prec > order_cap {
                return disks;
            }
        }
        prec = prec.checked_mul(2).expect("root isolation precision overflow");
        assert!(prec < 1 << 22, "root isolation did not converge");
        budget = 60 + 4 * n;
    }
}

/// Disks for every distinct root, canonical order, radius at most `2^-bits`.
fn isolate_disks(p: &IntPolynomial, bits: u32) -> Vec<Disk> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let sq = p.squarefree_part();
    let mut q = sq.coeffs().to_vec();
    let mut disks = Vec::new();
    let mut bits = bits;
    if q[0].is_zero() {
        q.remove(0);
        let deg = zx::degree(&q).unwrap_or(0);
        // nonzero roots have modulus at least |q0| / (|q0| + max |q_k|)
        let mut zero_r = Dyadic::pow2(-(bits as i64));
        if deg > 0 {
            let m = q[1..].iter().map(|c| c.abs()).max().unwrap();
            let low = BigRational::new(q[0].abs(), q[0].abs() + m);
            let low_d = Dyadic::from_rational(&low, 32, Round::Down).mul_pow2(-3);
            let k = -libm::floor(low_d.log2_abs()) as i64 + 1;
            let k = k.max(0) as u32;
            if k > bits {
                bits = k;
                zero_r = Dyadic::pow2(-(bits as i64));
            }
        }
        disks.push(Disk { c: CDyadic::zero(), r: zero_r });
    }
    if zx::degree(&q).unwrap_or(0) > 0 {
        disks.extend(isolate_squarefree(&q, bits));
    }
    disks.sort_by(|a, b| cmp_dyadic_pair(&a.c, &b.c));
    disks
}

/// Isolating disks of radius at most `2^-bits` for the distinct roots of
/// `p`, in canonical order (real part, then imaginary part).
pub fn isolate_roots_bits(p: &IntPolynomial, bits: u32) -> Vec<RootBox> {
    isolate_disks(p, bits).iter().map(RootBox::from_disk).collect()
}

/// Isolating disks of radius at most `precision` for the distinct roots of
/// `p`, in canonical order (real part, then imaginary part).
pub fn isolate_roots(p: &IntPolynomial, precision: &BigRational) -> Vec<RootBox> {
    assert!(precision.is_positive(), "precision must be positive");
    let mut bits = 0u32;
    let mut t = BigRational::from_integer(BigInt::from(1));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    while t > *precision {
        t = &t * &half;
        bits += 1;
    }
    isolate_roots_bits(p, bits)
}

fn rational_disk_contains_rect(b: &RootBox, x: &CInterval) -> bool {
    let corners = [(&x.re.lo, &x.im.lo), (&x.re.lo, &x.im.hi), (&x.re.hi, &x.im.lo), (&x.re.hi, &x.im.hi)];
    corners.iter().all(|(r, i)| b.contains(&r.to_rational(), &i.to_rational()))
}

/// Newton polishing followed by a Krawczyk test; `None` if the test fails.
fn krawczyk(p: &[Dyadic], dp: &[Dyadic], b: &RootBox, start: CDyadic, bits: u32) -> Option<CInterval> {
    let real = b.is_real();
    let mag = start.log2_abs().max(0.0) as u32;
    let prec = bits + 48 + mag;
    let mut z = start;
    let goal = -(bits as f64) - 8.0;
    let mut converged = false;
    for _ in 0..200 {
        let (v, d) = horner(p, &z, prec);
        if v.is_zero() {
            converged = true;
            break;
        }
        let step = v.div(&d, prec)?;
        z = z.sub(&step).round(prec);
        if real {
            z.im = Dyadic::zero();
        }
        if step.log2_abs() < goal {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let h = Dyadic::pow2(-(bits as i64) - 2);
    let x = if real {
        CInterval::real(Interval::ball(&z.re, &h))
    } else {
        CInterval::new(Interval::ball(&z.re, &h), Interval::ball(&z.im, &h))
    };
    if !rational_disk_contains_rect(b, &x) {
        return None;
    }
    let wp = prec + 16;
    let zi = CInterval::point(&z);
    let pz = horner_interval(p, &zi, wp);
    let (_, dz) = horner(p, &z, prec);
    let y = CDyadic::real(Dyadic::one()).div(&dz, prec)?;
    let yi = CInterval::point(&y);
    let dpx = horner_interval(dp, &x, wp);
    let one = CInterval::one();
    let k = zi.sub(&yi.mul(&pz, wp), wp).add(&one.sub(&yi.mul(&dpx, wp), wp).mul(&x.sub(&zi, wp), wp), wp);
    let inside = if real { x.re.strictly_contains(&k.re) } else { x.strictly_contains(&k) };
    if inside {
        Some(x)
    } else {
        None
    }
}

/// Rectangle of side at most `2^-bits` around the unique root of `p` in
/// `b`. A real-centered box yields a rectangle with zero imaginary width.
pub fn enclose_root(p: &IntPolynomial, b: &RootBox, bits: u32) -> CInterval {
    let sq = p.squarefree_part();
    let pd = to_dyadic(sq.coeffs());
    let dpd = to_dyadic(&zx::derivative(sq.coeffs()));
    let center = CDyadic::new(
        Dyadic::from_rational(&b.re, bits + 64, Round::Nearest),
        Dyadic::from_rational(&b.im, bits + 64, Round::Nearest),
    );
    if let Some(x) = krawczyk(&pd, &dpd, b, center, bits) {
        return x;
    }
    // fall back on full isolation at increasing precision
    let mut k = bits.max(b.radius_bits() + 8);
    loop {
        let found: Vec<Disk> =
            isolate_disks(&sq, k).into_iter().filter(|d| b.intersects(&RootBox::from_disk(d))).collect();
        if found.len() == 1 {
            let d = &found[0];
            if let Some(x) = krawczyk(&pd, &dpd, b, d.c.clone(), bits) {
                return x;
            }
            if k >= bits + 2 {
                let r = d.r.clone();
                let x = if d.c.im.is_zero() {
                    CInterval::real(Interval::ball(&d.c.re, &r))
                } else {
                    CInterval::new(Interval::ball(&d.c.re, &r), Interval::ball(&d.c.im, &r))
                };
                return x;
            }
        }
        k = k * 2 + 8;
        assert!(k < 1 << 22, "root enclosure did not converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    fn approx(b: &RootBox) -> (f64, f64) {
        (rat_f64(&b.re), rat_f64(&b.im))
    }

    fn rat_f64(q: &BigRational) -> f64 {
        Dyadic::from_rational(q, 60, Round::Nearest).to_f64()
    }

    fn eps() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(1000))
    }

    #[test]
    fn quadratic_real_roots() {
        let bs = isolate_roots(&parse_poly("x^2-3x+1").unwrap(), &eps());
        assert_eq!(bs.len(), 2);
        assert!((approx(&bs[0]).0 - 0.3819660112501051).abs() < 1e-3);
        assert!((approx(&bs[1]).0 - 2.618033988749895).abs() < 1e-3);
        assert!(bs.iter().all(|b| b.is_real() && b.radius <= eps()));
    }

    #[test]
    fn imaginary_pair_and_repeated() {
        let bs = isolate_roots(&parse_poly("x^2+1").unwrap(), &eps());
        assert_eq!(bs.len(), 2);
        assert_eq!(approx(&bs[0]), (0.0, -1.0));
        let bs = isolate_roots(&parse_poly("x^3-3x^2+3x-1").unwrap(), &eps());
        assert_eq!(bs.len(), 1);
        assert!((approx(&bs[0]).0 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn zero_root_and_pure_imaginary() {
        let p = parse_poly("x^5+5x^3+4x").unwrap();
        let bs = isolate_roots_bits(&p, 20);
        let im: Vec<f64> = bs.iter().map(|b| approx(b).1).collect();
        assert_eq!(bs.len(), 5);
        assert!(bs.iter().all(|b| b.re.is_zero()));
        for (a, e) in im.iter().zip([-2.0, -1.0, 0.0, 1.0, 2.0]) {
            assert!((a - e).abs() < 1e-5);
        }
    }

    #[test]
    fn salem_quartic() {
        let bs = isolate_roots_bits(&parse_poly("x^4-x^3-x^2-x+1").unwrap(), 40);
        let expected = [
            (-0.651387818865997323, -0.758744956775989820),
            (-0.651387818865997323, 0.758744956775989820),
            (0.580691831992952401, 0.0),
            (1.722083805739042245, 0.0),
        ];
        for (b, e) in bs.iter().zip(expected) {
            let (x, y) = approx(b);
            assert!((x - e.0).abs() < 1e-11 && (y - e.1).abs() < 1e-11, "{x} {y}");
        }
    }

    #[test]
    fn enclosure_refines() {
        let p = parse_poly("x^2-2").unwrap();
        let bs = isolate_roots_bits(&p, 4);
        let e = enclose_root(&p, &bs[1], 200);
        assert!(e.re.width() <= Dyadic::pow2(-200));
        assert!((e.re.mid_f64() - core::f64::consts::SQRT_2).abs() < 1e-15);
        let sq = e.re.sqr(400);
        assert!(sq.contains(&Dyadic::from_int(2)));
        let c = parse_poly("x^2+x+1").unwrap();
        let bs = isolate_roots_bits(&c, 4);
        let e = enclose_root(&c, &bs[1], 100);
        assert!((e.im.mid_f64() - 0.8660254037844386).abs() < 1e-15);
    }

    #[test]
    fn cyclotomic_symmetric_roots() {
        // both conjugate and axis symmetry with equal imaginary parts
        for n in [3u64, 5, 7, 8, 9, 12, 15, 16, 20, 24, 30] {
            let p = crate::intpoly::cyclotomic_poly(n);
            let r = isolate_roots_bits(&p, 40);
            assert_eq!(r.len(), p.degree());
            for w in r.windows(2) {
                assert!((w[0].re.clone(), w[0].im.clone()) < (w[1].re.clone(), w[1].im.clone()));
            }
        }
    }
}
