//! Multiplicative relations with exact certificates, the sign cocycle of
//! the Galois action on a unit, and the Salem construction built from it.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algnum::AlgebraicNumber;
use crate::arith::transcendental::ln;
use crate::arith::{CInterval, Interval};
use crate::error::{Error, Result};
use crate::galois::{GaloisContext, Permutation};
use crate::heights::{classify, Classification};
use crate::intpoly::cyclotomic_index;
use crate::numfield::FieldElem;

/// `a^m b^n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicativeRelation {
    pub m: i64,
    pub n: i64,
    pub verified: bool,
}

/// Default exponent bound for relation searches.
pub const DEFAULT_MAX_EXP: u32 = 32;

fn check_input(a: &AlgebraicNumber) -> Result<()> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    if a.is_torsion().is_some() {
        return Err(Error::TorsionInput);
    }
    Ok(())
}

/// Exact check of `a^m b^n = 1`.
pub fn verify_relation(a: &AlgebraicNumber, b: &AlgebraicNumber, m: i64, n: i64) -> bool {
    if m == 0 && n == 0 {
        return false;
    }
    match (a.pow(m), b.pow(n)) {
        (Ok(x), Ok(y)) => x.mul(&y).is_one(),
        _ => false,
    }
}

/// `log |a|`: exactly zero when `|a| = 1`, otherwise an interval excluding
/// zero.
fn log_abs(a: &AlgebraicNumber) -> Option<Interval> {
    if a.has_unit_modulus() {
        return None;
    }
    let tiny = BigRational::new(BigInt::one(), BigInt::one() << 80);
    let m = a.abs_at_selector(&tiny);
    let l = ln(&m, 96).expect("nonzero modulus");
    assert!(!l.contains_zero());
    Some(l)
}

/// Whether the certified enclosure of `a^m b^n` contains 1.
fn numerically_possible(a: &AlgebraicNumber, b: &AlgebraicNumber, m: i64, n: i64) -> bool {
    let prec = 96 + 8 * (m.unsigned_abs() + n.unsigned_abs()) as u32;
    let ea = a.enclosure(prec);
    let eb = b.enclosure(prec);
    let (Some(pa), Some(pb)) = (ea.powi(m, prec), eb.powi(n, prec)) else {
        return true;
    };
    let v = pa.mul(&pb, prec);
    v.intersects(&CInterval::one())
}

fn order_key(&(m, n): &(i64, i64)) -> (u64, u64, bool) {
    (m.unsigned_abs() + n.unsigned_abs(), m.unsigned_abs(), m < 0)
}

/// A relation `a^m b^n = 1` with `|m|, |n| <= max_exp`, minimal in
/// `|m| + |n|` (then `|m|`, then `m > 0`), or `None` when there is none
/// within the bound.
pub fn find_relation(a: &AlgebraicNumber, b: &AlgebraicNumber, max_exp: u32) -> Result<Option<MultiplicativeRelation>> {
    check_input(a)?;
    check_input(b)?;
    let e = max_exp as i64;
    let la = log_abs(a);
    let lb = log_abs(b);
    let mut cands: Vec<(i64, i64)> = Vec::new();
    match (&la, &lb) {
        // a^m b^n = 1 would force a torsion factor
        (None, Some(_)) | (Some(_), None) => return Ok(None),
        (Some(la), Some(lb)) => {
            // m log|a| = -n log|b| pins m to a short range for each n
            for n in (-e..=e).filter(|&n| n != 0) {
                let r = lb.mul_int(-n, 128).div(la, 128).expect("nonzero");
                let lo = r.lo.ceil();
                let hi = r.hi.floor();
                let mut m = lo;
                while m <= hi {
                    if let Some(mi) = num_traits::ToPrimitive::to_i64(&m) {
                        if mi != 0 && mi.abs() <= e {
                            cands.push((mi, n));
                        }
                    }
                    m += 1;
                }
            }
        }
        (None, None) => {
            for m in -e..=e {
                for n in -e..=e {
                    if m != 0 && n != 0 {
                        cands.push((m, n));
                    }
                }
            }
        }
    }
    cands.sort_by_key(order_key);
    for (m, n) in cands {
        if numerically_possible(a, b, m, n) && verify_relation(a, b, m, n) {
            return Ok(Some(MultiplicativeRelation { m, n, verified: true }));
        }
    }
    Ok(None)
}

/// Order of a field element that is a root of unity.
fn torsion_order(ctx: &GaloisContext, e: &FieldElem) -> Option<u64> {
    let p = ctx.field().minpoly(e);
    if !p.is_monic() {
        return None;
    }
    cyclotomic_index(&p)
}

fn unit_elem(ctx: &GaloisContext, a: &AlgebraicNumber) -> Result<FieldElem> {
    check_input(a)?;
    ctx.express(a)
}

/// `(p, s)`: the least `p >= 1` with `g(a)^p = a^(s p)`, `s = +-1`.
fn sigma_data(ctx: &GaloisContext, g: usize, e: &FieldElem, max_exp: u32) -> Result<(u64, i8)> {
    let k = ctx.field();
    let s = ctx.apply_elem(g, e);
    let inv = k.inv(e).ok_or(Error::ZeroInput)?;
    if let Some(p) = torsion_order(ctx, &k.mul(&s, &inv)) {
        if p <= max_exp as u64 {
            return Ok((p, 1));
        }
    }
    if let Some(p) = torsion_order(ctx, &k.mul(&s, e)) {
        if p <= max_exp as u64 {
            return Ok((p, -1));
        }
    }
    Err(Error::NotDependent)
}

/// Least `p` with `g(a)^p = a^(+-p)`.
pub fn p_sigma(ctx: &GaloisContext, g: usize, a: &AlgebraicNumber, max_exp: u32) -> Result<u64> {
    let e = unit_elem(ctx, a)?;
    Ok(sigma_data(ctx, g, &e, max_exp)?.0)
}

/// The sign `c(g, a)` with `g(a)^p = a^(c p)`.
pub fn cocycle_value(ctx: &GaloisContext, g: usize, a: &AlgebraicNumber, max_exp: u32) -> Result<i8> {
    let e = unit_elem(ctx, a)?;
    Ok(sigma_data(ctx, g, &e, max_exp)?.1)
}

#[derive(Clone, Debug)]
pub struct SalemConstruction {
    pub alpha: AlgebraicNumber,
    pub group: Vec<Permutation>,
    pub p_sigmas: Vec<u64>,
    pub cocycle: Vec<i8>,
    /// Product of all `p_sigma`.
    pub p_total: u64,
    pub underline_alpha: AlgebraicNumber,
    /// Elements of the group fixing the underlined alpha.
    pub stabilizer: Vec<Permutation>,
    pub tilde_alpha: AlgebraicNumber,
    /// Whether the product of all conjugates of alpha over the group is 1.
    pub product_is_one: bool,
    pub equivariance_verified: bool,
    pub classification: Classification,
}

impl SalemConstruction {
    /// `[k_T : k']`, the order of the stabilizer.
    pub fn stabilizer_index(&self) -> u64 {
        self.stabilizer.len() as u64
    }
}

pub fn construct_salem(ctx: &GaloisContext, a: &AlgebraicNumber, max_exp: u32) -> Result<SalemConstruction> {
    let e = unit_elem(ctx, a)?;
    let k = ctx.field();
    let mut p_sigmas = Vec::with_capacity(ctx.order());
    let mut cocycle = Vec::with_capacity(ctx.order());
    for g in 0..ctx.order() {
        let (p, s) = sigma_data(ctx, g, &e, max_exp)?;
        p_sigmas.push(p);
        cocycle.push(s);
    }
    let p_total = p_sigmas
        .iter()
        .try_fold(1u64, |acc, &p| acc.checked_mul(p))
        .ok_or_else(|| Error::InvalidArgument("exponent product overflows".into()))?;
    let under = k.pow(&e, p_total as i64).expect("nonzero");
    let stab = ctx.stabilizer_elem(&under);
    let mut tilde = FieldElem::from_int(1);
    for &h in &stab {
        tilde = k.mul(&tilde, &ctx.apply_elem(h, &e));
    }
    let equivariance_verified =
        (0..ctx.order()).all(|g| ctx.apply_elem(g, &tilde) == k.pow(&tilde, cocycle[g] as i64).expect("nonzero"));
    let mut prod = FieldElem::from_int(1);
    for g in 0..ctx.order() {
        prod = k.mul(&prod, &ctx.apply_elem(g, &e));
    }
    let tilde_alpha = k.to_algebraic(&tilde);
    let classification = classify(&tilde_alpha);
    Ok(SalemConstruction {
        alpha: a.clone(),
        group: ctx.group().to_vec(),
        p_sigmas,
        cocycle,
        p_total,
        underline_alpha: k.to_algebraic(&under),
        stabilizer: stab.iter().map(|&h| ctx.group()[h].clone()).collect(),
        tilde_alpha,
        product_is_one: prod == FieldElem::from_int(1),
        equivariance_verified,
        classification,
    })
}

/// Checks `tilde^P = underline^[k_T:k'] = alpha^(P [k_T:k']) != 1` exactly.
pub fn verify_power_identity(c: &SalemConstruction) -> bool {
    let p = c.p_total as i64;
    let idx = c.stabilizer_index() as i64;
    let Some(total) = p.checked_mul(idx) else { return false };
    let (Ok(lhs), Ok(mid), Ok(rhs)) = (c.tilde_alpha.pow(p), c.underline_alpha.pow(idx), c.alpha.pow(total)) else {
        return false;
    };
    let under_ok = c.alpha.pow(p).is_ok_and(|u| u == c.underline_alpha);
    under_ok && lhs == mid && mid == rhs && !rhs.is_one()
}

/// Lemma-style product test: whether `prod_g g(a) = 1` over the group.
pub fn galois_product_is_one(ctx: &GaloisContext, a: &AlgebraicNumber) -> Result<bool> {
    let e = ctx.express(a)?;
    let k = ctx.field();
    let mut prod = FieldElem::from_int(1);
    for g in 0..ctx.order() {
        prod = k.mul(&prod, &ctx.apply_elem(g, &e));
    }
    Ok(prod == FieldElem::from_int(1))
}
