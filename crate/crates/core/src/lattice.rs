//! Semisimple elements of `SL_n(k)`: eigenvalues, root values
//! `lambda_i / lambda_j`, Mahler measure and height of the element, the
//! adjoint characteristic polynomial, geodesic length, multiplicative rank
//! and the related checks.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algnum::{bits_for, AlgebraicNumber};
use crate::arith::transcendental::ln;
use crate::arith::{CInterval, Interval};
use crate::bounds::{two_length_bound, BoundParams};
use crate::error::{Error, Result};
use crate::galois::GaloisContext;
use crate::heights::{log_mahler, outside_unit_circle, weil_height};
use crate::intpoly::{factor_over_integers, IntPolynomial};
use crate::numfield::{FieldElem, FieldPoly, NumberField};
use crate::reldep::{find_relation, galois_product_is_one};

/// An archimedean place of `k`: an index into the canonical root order of
/// the defining polynomial, and whether the group is compact there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Place {
    pub embedding: usize,
    pub compact: bool,
}

/// A matrix in `SL_n(k)` with the archimedean places it is measured at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleElementSpec {
    /// Defining polynomial of `k`; `x` for the rationals.
    pub field_poly: IntPolynomial,
    /// Entries as coefficient vectors in the generator of `k`.
    pub matrix: Vec<Vec<Vec<BigRational>>>,
    pub places: Vec<Place>,
    pub metric_scale: BigRational,
}

impl SemisimpleElementSpec {
    pub fn new(field_poly: IntPolynomial, matrix: Vec<Vec<Vec<BigRational>>>, places: Vec<Place>) -> Self {
        SemisimpleElementSpec { field_poly, matrix, places, metric_scale: BigRational::one() }
    }

    /// A spec over Q with integer entries and the single real place.
    pub fn over_q(rows: &[&[i64]]) -> Self {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|&c| alloc::vec![BigRational::from_integer(c.into())]).collect())
            .collect();
        Self::new(IntPolynomial::x(), m, alloc::vec![Place { embedding: 0, compact: false }])
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// The same spec with the matrix raised to the power `e >= 1`.
    pub fn power(&self, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("power must be positive".into()));
        }
        let k = field_of(&self.field_poly, 0)?;
        let m = field_matrix(&k, &self.matrix)?;
        let mut acc = m.clone();
        for _ in 1..e {
            acc = mat_mul(&k, &acc, &m);
        }
        let matrix = acc.iter().map(|r| r.iter().map(|c| c.coeffs().to_vec()).collect()).collect();
        Ok(SemisimpleElementSpec { matrix, ..self.clone() })
    }
}

type Mat = Vec<Vec<FieldElem>>;

fn field_of(p: &IntPolynomial, embedding: usize) -> Result<NumberField> {
    if p.degree() == 1 {
        return Ok(NumberField::new(AlgebraicNumber::from_root(p, 0)?));
    }
    Ok(NumberField::new(AlgebraicNumber::from_root(p, embedding)?))
}

fn field_matrix(k: &NumberField, m: &[Vec<Vec<BigRational>>]) -> Result<Mat> {
    let n = m.len();
    if n < 2 || m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidSpec("matrix must be square of size at least 2".into()));
    }
    Ok(m.iter().map(|r| r.iter().map(|c| k.elem(c)).collect()).collect())
}

fn mat_mul(k: &NumberField, a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let mut out = alloc::vec![alloc::vec![FieldElem::from_int(0); m]; n];
    for i in 0..n {
        for l in 0..b.len() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = k.add(&out[i][j], &k.mul(&a[i][l], &b[l][j]));
            }
        }
    }
    out
}

/// Characteristic polynomial `det(t I - A)`, ascending, by Faddeev-LeVerrier.
fn char_poly(k: &NumberField, a: &Mat) -> FieldPoly {
    let n = a.len();
    let mut c = alloc::vec![FieldElem::from_int(0); n + 1];
    c[n] = FieldElem::from_int(1);
    let mut m: Mat = alloc::vec![alloc::vec![FieldElem::from_int(0); n]; n];
    for step in 1..=n {
        let mut next = mat_mul(k, a, &m);
        for i in 0..n {
            next[i][i] = k.add(&next[i][i], &c[n - step + 1]);
        }
        let am = mat_mul(k, a, &next);
        let mut tr = FieldElem::from_int(0);
        for i in 0..n {
            tr = k.add(&tr, &am[i][i]);
        }
        c[n - step] = k.scale(&tr, &-BigRational::new(BigInt::one(), BigInt::from(step)));
        m = next;
    }
    c
}

fn poly_derivative(k: &NumberField, p: &FieldPoly) -> FieldPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| k.scale(c, &BigRational::from_integer(BigInt::from(i)))).collect()
}

/// Multiplication-by-`e` matrix in the power basis.
fn mult_matrix(k: &NumberField, e: &FieldElem) -> Vec<Vec<BigRational>> {
    let d = k.degree();
    let mut cols = Vec::with_capacity(d);
    let mut b = FieldElem::from_int(1);
    let theta = k.theta();
    for _ in 0..d {
        let mut col = k.mul(e, &b).coeffs().to_vec();
        col.resize(d, BigRational::zero());
        cols.push(col);
        b = k.mul(&b, &theta);
    }
    (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
}

/// `N_{k/Q}(det(t I - M))`, the characteristic polynomial of `M` as a
/// Q-linear map on `k^n`.
fn norm_char_poly(k: &NumberField, m: &Mat) -> IntPolynomial {
    let n = m.len();
    let d = k.degree();
    let q = NumberField::rationals();
    let mut big: Mat = alloc::vec![alloc::vec![FieldElem::from_int(0); n * d]; n * d];
    for i in 0..n {
        for j in 0..n {
            let block = mult_matrix(k, &m[i][j]);
            for (a, row) in block.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    big[i * d + a][j * d + b] = FieldElem::from_rational(v.clone());
                }
            }
        }
    }
    let cp = char_poly(&q, &big);
    let coeffs: Vec<BigRational> = cp.iter().map(|c| c.as_rational().expect("rational")).collect();
    IntPolynomial::from_rational(&coeffs)
}

fn horner(coeffs: &[CInterval], z: &CInterval, prec: u32) -> CInterval {
    let mut acc = CInterval::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, prec).add(c, prec);
    }
    acc
}

/// A validated spec with its eigenvalues at every declared place.
#[derive(Clone, Debug)]
pub struct SemisimpleElement {
    spec: SemisimpleElementSpec,
    field: NumberField,
    matrix: Mat,
    char_poly: FieldPoly,
    eigen_factors: Vec<IntPolynomial>,
    /// Eigenvalues under the embedding of `k` given by index 0, then one
    /// list per declared place.
    primary: Vec<AlgebraicNumber>,
    at_places: Vec<Vec<AlgebraicNumber>>,
}

/// Root values `lambda_i / lambda_j`, `i != j`, and their split by torsion.
#[derive(Clone, Debug)]
pub struct EigenvalueSet {
    pub eigenvalues: Vec<AlgebraicNumber>,
    pub root_values: Vec<(usize, usize, AlgebraicNumber)>,
    pub hyp: Vec<AlgebraicNumber>,
    pub ell: Vec<AlgebraicNumber>,
    /// Distinct root values of modulus 1 at the primary embedding. This is
    /// the modulus reading of the split; it differs from `ell` on
    /// circle conjugates of Salem numbers.
    pub unit_modulus: Vec<AlgebraicNumber>,
}

fn push_unique(v: &mut Vec<AlgebraicNumber>, a: &AlgebraicNumber) {
    if !v.contains(a) {
        v.push(a.clone());
    }
}

fn root_values_of(ev: &[AlgebraicNumber]) -> Vec<(usize, usize, AlgebraicNumber)> {
    let inv: Vec<AlgebraicNumber> = ev.iter().map(|l| l.inv().expect("determinant 1")).collect();
    let mut out = Vec::new();
    for i in 0..ev.len() {
        for j in 0..ev.len() {
            if i != j {
                out.push((i, j, ev[i].mul(&inv[j])));
            }
        }
    }
    out
}

impl SemisimpleElement {
    pub fn new(spec: &SemisimpleElementSpec) -> Result<Self> {
        if !spec.metric_scale.is_positive() {
            return Err(Error::InvalidSpec("metric_scale must be positive".into()));
        }
        let k = field_of(&spec.field_poly, 0)?;
        let conj =
            if spec.field_poly.degree() == 1 { alloc::vec![k.generator().clone()] } else { k.generator().conjugates() };
        check_places(&spec.places, &conj)?;
        let m = field_matrix(&k, &spec.matrix)?;
        let n = m.len();
        let cp = char_poly(&k, &m);
        let det = if n % 2 == 0 { cp[0].clone() } else { k.neg(&cp[0]) };
        if det != FieldElem::from_int(1) {
            return Err(Error::InvalidSpec("determinant must be 1".into()));
        }
        if k.poly_gcd(&cp, &poly_derivative(&k, &cp)).len() != 1 {
            return Err(Error::NotSquarefree);
        }
        let norm = norm_char_poly(&k, &m);
        let eigen_factors: Vec<IntPolynomial> = factor_over_integers(&norm)?.into_iter().map(|(f, _)| f).collect();
        let candidates: Vec<AlgebraicNumber> = eigen_factors
            .iter()
            .flat_map(|f| (0..f.degree()).map(move |i| AlgebraicNumber::from_root(f, i).expect("irreducible factor")))
            .collect();
        let primary = eigen_at(&k, &cp, &candidates, &conj[0], n);
        let at_places =
            spec.places
                .iter()
                .map(|p| {
                    if p.embedding == 0 {
                        primary.clone()
                    } else {
                        eigen_at(&k, &cp, &candidates, &conj[p.embedding], n)
                    }
                })
                .collect();
        Ok(SemisimpleElement {
            spec: spec.clone(),
            field: k,
            matrix: m,
            char_poly: cp,
            eigen_factors,
            primary,
            at_places,
        })
    }

    pub fn spec(&self) -> &SemisimpleElementSpec {
        &self.spec
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// Degree of `k` over Q.
    pub fn field_degree(&self) -> usize {
        self.spec.field_poly.degree()
    }

    /// Characteristic polynomial of the matrix over `k`.
    pub fn char_poly(&self) -> &FieldPoly {
        &self.char_poly
    }

    /// Irreducible factors over Z of the norm of the characteristic
    /// polynomial: the minimal polynomials of all eigenvalues.
    pub fn eigen_factors(&self) -> &[IntPolynomial] {
        &self.eigen_factors
    }

    pub fn eigenvalues(&self) -> &[AlgebraicNumber] {
        &self.primary
    }

    pub fn eigenvalue_set(&self) -> EigenvalueSet {
        let root_values = root_values_of(&self.primary);
        let mut hyp = Vec::new();
        let mut ell = Vec::new();
        let mut unit_modulus = Vec::new();
        for (_, _, v) in &root_values {
            if v.is_torsion().is_some() {
                push_unique(&mut ell, v);
            } else {
                push_unique(&mut hyp, v);
            }
            if v.has_unit_modulus() {
                push_unique(&mut unit_modulus, v);
            }
        }
        EigenvalueSet { eigenvalues: self.primary.clone(), root_values, hyp, ell, unit_modulus }
    }
}

fn check_places(places: &[Place], conj: &[AlgebraicNumber]) -> Result<()> {
    let mut seen = alloc::vec![false; conj.len()];
    for p in places {
        let Some(r) = conj.get(p.embedding) else {
            return Err(Error::InvalidSpec(alloc::format!("embedding index {} out of range", p.embedding)));
        };
        let partner = if r.is_real() { p.embedding } else { conj.iter().position(|c| *c == r.conj()).expect("closed") };
        if seen[p.embedding] || seen[partner] {
            return Err(Error::InvalidSpec(alloc::format!("place {} listed twice", p.embedding)));
        }
        seen[p.embedding] = true;
        seen[partner] = true;
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidSpec("places must cover every archimedean embedding".into()));
    }
    Ok(())
}

/// The `n` roots of the embedded characteristic polynomial, picked among
/// the roots of the norm by excluding the others numerically.
fn eigen_at(
    k: &NumberField,
    cp: &FieldPoly,
    cands: &[AlgebraicNumber],
    root: &AlgebraicNumber,
    n: usize,
) -> Vec<AlgebraicNumber> {
    let mut alive: Vec<usize> = (0..cands.len()).collect();
    let mut bits = 32;
    while alive.len() > n {
        let coeffs: Vec<CInterval> = cp.iter().map(|c| k.eval_at(c, root, bits)).collect();
        alive.retain(|&i| horner(&coeffs, &cands[i].enclosure(bits), bits + 32).contains_zero());
        bits *= 2;
    }
    assert_eq!(alive.len(), n, "true eigenvalues are never excluded");
    alive.into_iter().map(|i| cands[i].clone()).collect()
}

pub fn eigenvalue_set(spec: &SemisimpleElementSpec) -> Result<EigenvalueSet> {
    Ok(SemisimpleElement::new(spec)?.eigenvalue_set())
}

fn sum_terms<F>(el: &SemisimpleElement, precision: &BigRational, term: F) -> Result<Interval>
where
    F: Fn(&AlgebraicNumber, &BigRational) -> Result<Interval>,
{
    let rv = root_values_of(&el.primary);
    let per = precision / BigInt::from(rv.len() as u64 + 1);
    let wp = bits_for(precision) + 32;
    let mut acc = Interval::zero();
    for (_, _, v) in &rv {
        acc = acc.add(&term(v, &per)?, wp);
    }
    Ok(acc)
}

/// `m(g)`: the sum of logarithmic Mahler measures of all root values.
pub fn mahler_gamma(el: &SemisimpleElement, precision: &BigRational) -> Result<Interval> {
    sum_terms(el, precision, log_mahler)
}

/// `h(g)`: the sum of Weil heights of all root values.
pub fn height_gamma(el: &SemisimpleElement, precision: &BigRational) -> Result<Interval> {
    sum_terms(el, precision, weil_height)
}

/// Divides by the monic `t - 1`; the remainder must vanish.
fn div_t_minus_1(k: &NumberField, p: &FieldPoly) -> Option<FieldPoly> {
    let n = p.len() - 1;
    let mut q = alloc::vec![FieldElem::from_int(0); n];
    let mut carry = FieldElem::from_int(0);
    for i in (0..n).rev() {
        carry = k.add(&p[i + 1], &carry);
        q[i] = carry.clone();
    }
    k.add(&p[0], &carry).is_zero().then_some(q)
}

/// Power sums `p_1..p_m` of the roots of a monic polynomial over `k`.
fn power_sums_k(k: &NumberField, f: &FieldPoly, m: usize) -> Vec<FieldElem> {
    let n = f.len() - 1;
    // e_i with sign: f = t^n + a_{n-1} t^{n-1} + ...
    let a = |i: usize| f[n - i].clone();
    let mut p: Vec<FieldElem> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut s =
            if j <= n { k.scale(&a(j), &-BigRational::from_integer(BigInt::from(j))) } else { FieldElem::from_int(0) };
        for i in 1..j.min(n + 1) {
            s = k.sub(&s, &k.mul(&a(i), &p[j - i - 1]));
        }
        p.push(s);
    }
    p
}

/// Monic polynomial of degree `d` with the given power sums.
fn from_power_sums_k(k: &NumberField, p: &[FieldElem], d: usize) -> FieldPoly {
    let mut e = alloc::vec![FieldElem::from_int(1)];
    for j in 1..=d {
        let mut s = FieldElem::from_int(0);
        for i in 1..=j {
            let t = k.mul(&e[j - i], &p[i - 1]);
            s = if i % 2 == 1 { k.add(&s, &t) } else { k.sub(&s, &t) };
        }
        e.push(k.scale(&s, &BigRational::new(BigInt::one(), BigInt::from(j))));
    }
    (0..=d)
        .map(|i| {
            let c = &e[d - i];
            if (d - i) % 2 == 1 {
                k.neg(c)
            } else {
                c.clone()
            }
        })
        .collect()
}

fn ad_matrix(k: &NumberField, m: &Mat) -> Mat {
    let n = m.len();
    let inv = mat_inverse(k, m);
    // basis: E_ij (i != j), then H_i = E_ii - E_nn
    let mut basis: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push((i, j));
            }
        }
    }
    let dim = n * n - 1;
    let mut out = alloc::vec![alloc::vec![FieldElem::from_int(0); dim]; dim];
    let zero = || alloc::vec![alloc::vec![FieldElem::from_int(0); n]; n];
    let mut col = 0;
    let mut images: Vec<Mat> = Vec::new();
    for &(i, j) in &basis {
        let mut x = zero();
        x[i][j] = FieldElem::from_int(1);
        images.push(mat_mul(k, &mat_mul(k, m, &x), &inv));
    }
    for i in 0..n - 1 {
        let mut x = zero();
        x[i][i] = FieldElem::from_int(1);
        x[n - 1][n - 1] = FieldElem::from_int(-1);
        images.push(mat_mul(k, &mat_mul(k, m, &x), &inv));
    }
    for y in images {
        // coordinates: off-diagonal entries directly, diagonal via H_i
        for (r, &(i, j)) in basis.iter().enumerate() {
            out[r][col] = y[i][j].clone();
        }
        for i in 0..n - 1 {
            out[basis.len() + i][col] = y[i][i].clone();
        }
        col += 1;
    }
    out
}

fn mat_inverse(k: &NumberField, m: &Mat) -> Mat {
    let n = m.len();
    let mut a: Mat = m.to_vec();
    let mut b: Mat = (0..n).map(|i| (0..n).map(|j| FieldElem::from_int((i == j) as i64)).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(c, p);
        b.swap(c, p);
        let iv = k.inv(&a[c][c]).expect("nonzero pivot");
        for j in 0..n {
            a[c][j] = k.mul(&a[c][j], &iv);
            b[c][j] = k.mul(&b[c][j], &iv);
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    a[r][j] = k.sub(&a[r][j], &k.mul(&f, &a[c][j]));
                    b[r][j] = k.sub(&b[r][j], &k.mul(&f, &b[c][j]));
                }
            }
        }
    }
    b
}

/// `(t-1)^(n-1) prod_{i != j} (t - lambda_i/lambda_j)` over `k`, from the
/// eigenvalue power sums, checked against the characteristic polynomial
/// of the adjoint action on trace-zero matrices.
pub fn char_poly_ad(el: &SemisimpleElement) -> FieldPoly {
    let k = &el.field;
    let n = el.size();
    let chi = &el.char_poly;
    // roots 1/lambda: reversed polynomial made monic
    let rev: FieldPoly = {
        let r: FieldPoly = chi.iter().rev().cloned().collect();
        let lc = k.inv(&r[n]).expect("nonzero constant term");
        r.iter().map(|c| k.mul(c, &lc)).collect()
    };
    let m = n * n;
    let p1 = power_sums_k(k, chi, m);
    let p2 = power_sums_k(k, &rev, m);
    let prod: Vec<FieldElem> = p1.iter().zip(&p2).map(|(a, b)| k.mul(a, b)).collect();
    let mut full = from_power_sums_k(k, &prod, m);
    // drop the n diagonal ratios, keep n - 1 for the Cartan directions
    full = div_t_minus_1(k, &full).expect("ratio 1 occurs");
    let direct = char_poly(k, &ad_matrix(k, &el.matrix));
    assert_eq!(full, direct, "adjoint characteristic polynomial cross-check");
    full
}

fn log_abs(v: &AlgebraicNumber) -> Option<Interval> {
    if v.has_unit_modulus() {
        return None;
    }
    let tiny = BigRational::new(BigInt::one(), BigInt::one() << 200);
    Some(ln(&v.abs_at_selector(&tiny), 192).expect("nonzero"))
}

/// Per declared place: root values there and the weight of the place
/// (1 real, 4 complex). Compact places are checked and skipped.
fn place_values(el: &SemisimpleElement) -> Result<Vec<(u32, Vec<AlgebraicNumber>)>> {
    let conj0 = el.field.generator();
    let mut out = Vec::new();
    for (p, ev) in el.spec.places.iter().zip(&el.at_places) {
        let vals: Vec<AlgebraicNumber> = root_values_of(ev).into_iter().map(|(_, _, v)| v).collect();
        if p.compact {
            if vals.iter().any(|v| !v.has_unit_modulus()) {
                return Err(Error::CompactPlaceViolation { place: p.embedding });
            }
            continue;
        }
        let real = if el.field_degree() == 1 { true } else { conj0.conjugates()[p.embedding].is_real() };
        out.push((if real { 1 } else { 4 }, vals));
    }
    Ok(out)
}

/// Checks that every eigenvalue ratio has modulus exactly 1 at every place
/// flagged compact.
pub fn check_compact_places(el: &SemisimpleElement) -> Result<()> {
    place_values(el).map(|_| ())
}

/// `l(g) = (scale * sum_places sum_roots w (log |v|)^2)^(1/2)`.
pub fn length(el: &SemisimpleElement, precision: &BigRational) -> Result<Interval> {
    let places = place_values(el)?;
    let mut bits = bits_for(precision) + 32;
    loop {
        let mut acc = Interval::zero();
        let mut any = false;
        for (w, vals) in &places {
            for v in vals {
                if v.has_unit_modulus() {
                    continue;
                }
                any = true;
                let tiny = BigRational::new(BigInt::one(), BigInt::one() << bits);
                let l = ln(&v.abs_at_selector(&tiny), bits + 16).expect("nonzero");
                acc = acc.add(&l.sqr(bits + 16).mul_int(*w as i64, bits + 16), bits + 16);
            }
        }
        if !any {
            return Ok(Interval::zero());
        }
        let s = Interval::from_rational(&el.spec.metric_scale, bits + 16);
        let r = acc.mul(&s, bits + 16).sqrt(bits + 16);
        if r.width().to_rational() <= *precision {
            return Ok(r);
        }
        bits *= 2;
    }
}

/// `w(a) = |{s : |s(a)| != 1}| / [L:Q]` over the embeddings of the context
/// field, as an exact rational.
pub fn w_value(a: &AlgebraicNumber, ctx: &GaloisContext) -> Result<BigRational> {
    ctx.express(a)?;
    let conj = a.conjugates();
    let off = conj.iter().filter(|c| !c.has_unit_modulus()).count();
    Ok(BigRational::new(BigInt::from(off), BigInt::from(conj.len())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub degree: usize,
    pub w: BigRational,
    pub inverse_w: BigRational,
    pub holds: bool,
}

/// `[Q(a):Q] >= 1/w(a)`.
pub fn check_degree_bound(a: &AlgebraicNumber, ctx: &GaloisContext) -> Result<DegreeBoundReport> {
    let w = w_value(a, ctx)?;
    if w.is_zero() {
        return Err(Error::VacuousBound);
    }
    let inverse_w = w.recip();
    let degree = a.degree();
    Ok(DegreeBoundReport { degree, holds: BigRational::from_integer(degree.into()) >= inverse_w, w, inverse_w })
}

/// Outcome of a certified comparison `x <= y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Equal,
    Less,
    Violated,
}

impl Comparison {
    pub fn holds(self) -> bool {
        self != Comparison::Violated
    }
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    /// `sum log+ |v|` over root values.
    pub m_f: Interval,
    pub m_gamma: Interval,
    pub h_gamma: Interval,
    /// `[k_g : Q]`, the degree of the field generated by the root values.
    pub k_gamma_degree: usize,
    /// `m(f) <= m(g)`.
    pub first: Comparison,
    /// `h(g) <= m(g)`.
    pub lower: Comparison,
    /// `m(g) <= [k_g:Q] h(g)`.
    pub upper: Comparison,
}

/// Smallest field containing all the numbers, built by adjoining them in
/// turn.
pub fn compositum(values: &[AlgebraicNumber]) -> NumberField {
    let mut k = NumberField::rationals();
    for v in values {
        if k.express(v).is_none() {
            k = k.adjoin(v).0;
        }
    }
    k
}

fn compare(x: &Interval, y: &Interval, structural_equal: bool) -> Comparison {
    if structural_equal {
        return if x.intersects(y) { Comparison::Equal } else { Comparison::Violated };
    }
    if x.hi < y.lo {
        Comparison::Less
    } else {
        Comparison::Violated
    }
}

pub fn check_mahler_height_lemma(el: &SemisimpleElement, precision: &BigRational) -> Result<LemmaReport> {
    let rv: Vec<AlgebraicNumber> = root_values_of(&el.primary).into_iter().map(|(_, _, v)| v).collect();
    let set = el.eigenvalue_set();
    let kg = compositum(&set.hyp.iter().chain(&set.ell).cloned().collect::<Vec<_>>()).degree();
    let m_gamma = mahler_gamma(el, precision)?;
    let h_gamma = height_gamma(el, precision)?;
    let wp = bits_for(precision) + 32;
    let mut m_f = Interval::zero();
    for v in &rv {
        if outside_unit_circle(v) {
            m_f = m_f.add(&log_abs(v).expect("off the circle"), wp);
        }
    }
    // The gaps are sums of nonnegative terms whose vanishing is decided
    // exactly per root value.
    let nontorsion: Vec<&AlgebraicNumber> = rv.iter().filter(|v| v.is_torsion().is_none()).collect();
    let first_eq = nontorsion.iter().all(|v| {
        v.minpoly().leading().is_one() && v.conjugates().iter().filter(|c| *c != *v).all(|c| !outside_unit_circle(c))
    });
    let lower_eq = nontorsion.iter().all(|v| v.degree() == 1);
    let upper_eq = nontorsion.iter().all(|v| v.degree() == kg);
    let scaled_h = h_gamma.mul_int(kg as i64, wp);
    Ok(LemmaReport {
        first: compare(&m_f, &m_gamma, first_eq),
        lower: compare(&h_gamma, &m_gamma, lower_eq),
        upper: compare(&m_gamma, &scaled_h, upper_eq),
        m_f,
        m_gamma,
        h_gamma,
        k_gamma_degree: kg,
    })
}

/// Galois context of the eigenvalues (at the primary embedding) over `k`.
pub fn eigen_context(el: &SemisimpleElement) -> Result<GaloisContext> {
    GaloisContext::for_roots(el.primary.clone(), el.field.generator())
}

/// For each hyperbolic root value, whether the product of its images under
/// the context's group is 1.
pub fn check_prod1(el: &SemisimpleElement, ctx: &GaloisContext) -> Result<Vec<(AlgebraicNumber, bool)>> {
    el.eigenvalue_set().hyp.into_iter().map(|v| galois_product_is_one(ctx, &v).map(|b| (v, b))).collect()
}

#[derive(Clone, Debug)]
pub struct RankReport {
    /// Rank of the group generated by the hyperbolic root values, provided
    /// no relation exceeds the exponent bound.
    pub rank: usize,
    /// Basis elements found, independent up to the bound.
    pub basis: Vec<AlgebraicNumber>,
    /// Whether independence of the basis is certified (so `rank` is exact).
    pub certified: bool,
}

fn log_rows(k: &NumberField, elems: &[FieldElem], vals: &[AlgebraicNumber]) -> Vec<Vec<Interval>> {
    let embs = k.generator().conjugates();
    let mut rows: Vec<Vec<Interval>> = elems
        .iter()
        .map(|e| {
            embs.iter()
                .map(|r| {
                    let z = k.eval_at(e, r, 160);
                    ln(&z.abs(160), 160).expect("nonzero value")
                })
                .collect()
        })
        .collect();
    // exact valuations when every value is rational
    if vals.iter().all(|v| v.is_rational()) {
        let qs: Vec<BigRational> = vals.iter().map(|v| v.as_rational().unwrap()).collect();
        for p in small_primes(&qs) {
            for (row, q) in rows.iter_mut().zip(&qs) {
                let val = valuation(q.numer(), &p) - valuation(q.denom(), &p);
                row.push(Interval::from_int(val));
            }
        }
    }
    rows
}

fn valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// Primes dividing some numerator or denominator, by trial division.
fn small_primes(qs: &[BigRational]) -> Vec<BigInt> {
    let mut ps: Vec<BigInt> = Vec::new();
    for q in qs {
        for n in [q.numer().abs(), q.denom().clone()] {
            let mut n = n;
            let mut p = BigInt::from(2);
            while &p * &p <= n {
                if (&n % &p).is_zero() {
                    if !ps.contains(&p) {
                        ps.push(p.clone());
                    }
                    while (&n % &p).is_zero() {
                        n /= &p;
                    }
                }
                p += 1;
            }
            if n > BigInt::one() && !ps.contains(&n) {
                ps.push(n);
            }
        }
    }
    ps.sort();
    ps
}

fn det(rows: &[Vec<Interval>], cols: &[usize], prec: u32) -> Interval {
    match rows.len() {
        0 => Interval::one(),
        1 => rows[0][cols[0]].clone(),
        _ => {
            let mut acc = Interval::zero();
            for (i, _) in cols.iter().enumerate() {
                let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &c)| c).collect();
                let minor = det(&rows[1..], &sub_cols, prec);
                let t = rows[0][cols[i]].mul(&minor, prec);
                acc = if i % 2 == 0 { acc.add(&t, prec) } else { acc.sub(&t, prec) };
            }
            acc
        }
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return alloc::vec![Vec::new()];
    }
    if n < r {
        return Vec::new();
    }
    let mut out = combinations(n - 1, r);
    for mut c in combinations(n - 1, r - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn certified_independent(rows: &[Vec<Interval>]) -> bool {
    let r = rows.len();
    if r == 0 {
        return true;
    }
    combinations(rows[0].len(), r).iter().any(|cols| !det(rows, cols, 160).contains_zero())
}

/// Searches `v^m0 prod b_j^m_j = 1` with `0 < m0 <= e`, `|m_j| <= e`.
fn dependent_on(
    k: &NumberField,
    v: usize,
    basis: &[usize],
    elems: &[FieldElem],
    rows: &[Vec<Interval>],
    e: i64,
) -> bool {
    let r = basis.len();
    let ncols = rows[v].len();
    let prec = 160;
    let last = basis[r - 1];
    let pivot = (0..ncols).find(|&c| !rows[last][c].contains_zero());
    let mut exps = alloc::vec![-e; r]; // exps[0] is m0, then basis[0..r-1]
    exps[0] = 1;
    loop {
        // partial sums per column
        let partial: Vec<Interval> = (0..ncols)
            .map(|c| {
                let mut s = rows[v][c].mul_int(exps[0], prec);
                for (t, &b) in basis[..r - 1].iter().enumerate() {
                    s = s.add(&rows[b][c].mul_int(exps[t + 1], prec), prec);
                }
                s
            })
            .collect();
        let lasts: Vec<i64> = match pivot {
            Some(c) => {
                let q = partial[c].neg().div(&rows[last][c], prec).expect("pivot nonzero");
                let lo = q.lo.ceil().to_i64().unwrap_or(i64::MAX).max(-e);
                let hi = q.hi.floor().to_i64().unwrap_or(i64::MIN).min(e);
                (lo..=hi).collect()
            }
            None => (-e..=e).collect(),
        };
        for ml in lasts {
            let ok = (0..ncols).all(|c| partial[c].add(&rows[last][c].mul_int(ml, prec), prec).contains_zero());
            if ok {
                let mut acc = k.pow(&elems[v], exps[0]).expect("nonzero");
                for (t, &b) in basis[..r - 1].iter().enumerate() {
                    acc = k.mul(&acc, &k.pow(&elems[b], exps[t + 1]).expect("nonzero"));
                }
                acc = k.mul(&acc, &k.pow(&elems[last], ml).expect("nonzero"));
                if acc == FieldElem::from_int(1) {
                    return true;
                }
            }
        }
        // odometer: m0 in 1..=e, others in -e..=e
        let mut i = 0;
        loop {
            if i == r {
                return false;
            }
            let top = e;
            if exps[i] < top {
                exps[i] += 1;
                break;
            }
            exps[i] = if i == 0 { 1 } else { -e };
            i += 1;
        }
    }
}

/// Rank of the multiplicative group generated by the hyperbolic root
/// values. Values are added to a basis unless an exact relation with the
/// current basis exists within `max_exp`.
pub fn multiplicative_rank(el: &SemisimpleElement, max_exp: u32) -> Result<RankReport> {
    let hyp = el.eigenvalue_set().hyp;
    if hyp.is_empty() {
        return Ok(RankReport { rank: 0, basis: Vec::new(), certified: true });
    }
    let cap = el.size() - 1;
    let k = compositum(&hyp);
    let elems: Vec<FieldElem> = hyp.iter().map(|v| k.express(v).expect("in the compositum")).collect();
    let rows = log_rows(&k, &elems, &hyp);
    let e = max_exp as i64;
    let mut basis: Vec<usize> = Vec::new();
    for v in 0..hyp.len() {
        if basis.len() == cap {
            break;
        }
        if basis.is_empty() || !dependent_on(&k, v, &basis, &elems, &rows, e) {
            basis.push(v);
        }
    }
    let brows: Vec<Vec<Interval>> = basis.iter().map(|&b| rows[b].clone()).collect();
    Ok(RankReport {
        rank: basis.len(),
        certified: certified_independent(&brows),
        basis: basis.into_iter().map(|b| hyp[b].clone()).collect(),
    })
}

#[derive(Clone, Debug)]
pub enum PairOutcome {
    /// All log-moduli are rational multiples of one; `ratio` is
    /// `l_j^2 / l_i^2` when `l_i != 0`.
    Cyclic { ratio: Option<BigRational> },
    /// A value independent of the base up to the exponent bound.
    Independent { witness: (AlgebraicNumber, AlgebraicNumber), bound: Option<BoundEvaluation> },
}

/// The two-length lower bound at `deg_k`, conditional on the supplied
/// constants, next to the actual sum of lengths.
#[derive(Clone, Debug)]
pub struct BoundEvaluation {
    pub deg_k: usize,
    pub lengths_sum: Interval,
    /// `None` when the bound does not apply (`deg_k < 2`).
    pub bound: Option<Interval>,
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub outcome: PairOutcome,
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub lengths: Vec<Interval>,
    pub pairs: Vec<PairReport>,
}

/// Off-circle root values at the noncompact places, with place weights.
fn weighted_values(el: &SemisimpleElement) -> Result<Vec<(u32, AlgebraicNumber)>> {
    Ok(place_values(el)?
        .into_iter()
        .flat_map(|(w, vals)| vals.into_iter().filter(|v| !v.has_unit_modulus()).map(move |v| (w, v)))
        .collect())
}

fn pair_outcome(
    a: &SemisimpleElement,
    b: &SemisimpleElement,
    wa: &[(u32, AlgebraicNumber)],
    wb: &[(u32, AlgebraicNumber)],
    max_exp: u32,
) -> Result<core::result::Result<Option<BigRational>, (AlgebraicNumber, AlgebraicNumber)>> {
    let Some(base) = wa.iter().chain(wb).map(|(_, v)| v.clone()).next() else {
        return Ok(Ok(None));
    };
    let coeff = |vals: &[(u32, AlgebraicNumber)]| -> Result<core::result::Result<BigRational, (AlgebraicNumber, AlgebraicNumber)>> {
        let mut s = BigRational::zero();
        for (w, v) in vals {
            let q = if *v == base {
                BigRational::one()
            } else {
                match find_relation(v, &base, max_exp)? {
                    // v^m base^n = 1: log|v| = -n/m log|base|
                    Some(r) => BigRational::new(BigInt::from(-r.n), BigInt::from(r.m)),
                    None => return Ok(Err((v.clone(), base.clone()))),
                }
            };
            s += &q * &q * BigInt::from(*w);
        }
        Ok(Ok(s))
    };
    let sa = match coeff(wa)? {
        Ok(s) => s * &a.spec.metric_scale,
        Err(w) => return Ok(Err(w)),
    };
    let sb = match coeff(wb)? {
        Ok(s) => s * &b.spec.metric_scale,
        Err(w) => return Ok(Err(w)),
    };
    Ok(Ok((!sa.is_zero()).then(|| sb / sa)))
}

/// For each pair of elements, tries to write all log-moduli as rational
/// multiples of one; reports the exact ratio of squared lengths, or a
/// witness of independence with the conditional two-length bound.
pub fn spectrum_cyclic_check(
    els: &[SemisimpleElement],
    max_exp: u32,
    params: Option<&BoundParams>,
    precision: &BigRational,
) -> Result<SpectrumReport> {
    if els.len() < 2 {
        return Err(Error::InvalidArgument("at least two elements are required".into()));
    }
    let lengths = els.iter().map(|e| length(e, precision)).collect::<Result<Vec<_>>>()?;
    let weighted = els.iter().map(weighted_values).collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let outcome = match pair_outcome(&els[i], &els[j], &weighted[i], &weighted[j], max_exp)? {
                Ok(ratio) => PairOutcome::Cyclic { ratio },
                Err(witness) => {
                    let deg_k = els[i].field_degree().max(els[j].field_degree());
                    let bound = match params {
                        None => None,
                        Some(p) => Some(BoundEvaluation {
                            deg_k,
                            lengths_sum: lengths[i].add(&lengths[j], bits_for(precision) + 32),
                            bound: if deg_k >= 2 { Some(two_length_bound(deg_k as u64, p, precision)?) } else { None },
                        }),
                    };
                    PairOutcome::Independent { witness, bound }
                }
            };
            pairs.push(PairReport { i, j, outcome });
        }
    }
    Ok(SpectrumReport { lengths, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    fn eps(k: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(10).pow(k))
    }

    fn q(n: i64, d: i64) -> Vec<BigRational> {
        alloc::vec![BigRational::new(n.into(), d.into())]
    }

    fn f1() -> SemisimpleElement {
        SemisimpleElement::new(&SemisimpleElementSpec::over_q(&[&[2, 1], &[1, 1]])).unwrap()
    }

    fn diag3() -> SemisimpleElement {
        let z = || q(0, 1);
        let spec = SemisimpleElementSpec::new(
            IntPolynomial::x(),
            alloc::vec![alloc::vec![q(2, 1), z(), z()], alloc::vec![z(), q(3, 1), z()], alloc::vec![z(), z(), q(1, 6)],],
            alloc::vec![Place { embedding: 0, compact: false }],
        );
        SemisimpleElement::new(&spec).unwrap()
    }

    #[test]
    fn f1_eigenvalues() {
        let s = f1().eigenvalue_set();
        assert_eq!(s.hyp.len(), 2);
        assert!(s.ell.is_empty());
        for v in &s.hyp {
            assert_eq!(*v.minpoly(), parse_poly("x^2 - 7x + 1").unwrap());
        }
        let t = SemisimpleElement::new(&SemisimpleElementSpec::over_q(&[&[1, 1], &[-1, 0]])).unwrap().eigenvalue_set();
        assert!(t.hyp.is_empty());
        assert_eq!(t.ell.len(), 2);
        assert_eq!(diag3().eigenvalue_set().hyp.len(), 6);
    }

    #[test]
    fn rejects_bad_specs() {
        let e = SemisimpleElement::new(&SemisimpleElementSpec::over_q(&[&[2, 0], &[0, 1]]));
        assert!(matches!(e, Err(Error::InvalidSpec(_))));
        let e = SemisimpleElement::new(&SemisimpleElementSpec::over_q(&[&[1, 0], &[0, 1]]));
        assert_eq!(e.unwrap_err(), Error::NotSquarefree);
        let mut s = SemisimpleElementSpec::over_q(&[&[2, 1], &[1, 1]]);
        s.places.clear();
        assert!(SemisimpleElement::new(&s).is_err());
    }

    #[test]
    fn f1_measures() {
        let el = f1();
        let m = mahler_gamma(&el, &eps(20)).unwrap();
        assert!((m.mid_f64() - 3.8496946004768276).abs() < 1e-14);
        let h = height_gamma(&el, &eps(20)).unwrap();
        assert!((h.mid_f64() - 1.9248473002384138).abs() < 1e-14);
        let l = length(&el, &eps(20)).unwrap();
        assert!((l.mid_f64() - 2.7221451574944016).abs() < 1e-14);
        let r = check_mahler_height_lemma(&el, &eps(20)).unwrap();
        assert_eq!(r.k_gamma_degree, 2);
        assert_eq!((r.first, r.lower, r.upper), (Comparison::Less, Comparison::Less, Comparison::Equal));
    }

    #[test]
    fn adjoint_polynomial() {
        let cp = char_poly_ad(&f1());
        let c: Vec<BigRational> = cp.iter().map(|c| c.as_rational().unwrap()).collect();
        // (t - 1)(t^2 - 7t + 1)
        let want: Vec<BigRational> = [-1, 8, -8, 1].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        assert_eq!(c, want);
        char_poly_ad(&diag3());
    }

    #[test]
    fn ranks() {
        assert_eq!(multiplicative_rank(&f1(), 32).unwrap().rank, 1);
        let r = multiplicative_rank(&diag3(), 32).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.certified);
        let t = SemisimpleElement::new(&SemisimpleElementSpec::over_q(&[&[1, 1], &[-1, 0]])).unwrap();
        assert_eq!(multiplicative_rank(&t, 32).unwrap().rank, 0);
    }

    #[test]
    fn power_law() {
        let spec = SemisimpleElementSpec::over_q(&[&[2, 1], &[1, 1]]);
        let l1 = length(&f1(), &eps(20)).unwrap();
        for n in 2..=4u32 {
            let ln = length(&SemisimpleElement::new(&spec.power(n).unwrap()).unwrap(), &eps(20)).unwrap();
            let scaled = l1.mul_int(n as i64, 128);
            assert!(ln.intersects(&scaled));
        }
    }

    #[test]
    fn spectrum_square() {
        let spec = SemisimpleElementSpec::over_q(&[&[2, 1], &[1, 1]]);
        let sq = SemisimpleElement::new(&spec.power(2).unwrap()).unwrap();
        let r = spectrum_cyclic_check(&[f1(), sq], 32, None, &eps(10)).unwrap();
        match &r.pairs[0].outcome {
            PairOutcome::Cyclic { ratio } => assert_eq!(ratio.clone().unwrap(), BigRational::from_integer(4.into())),
            o => panic!("{o:?}"),
        }
    }

    fn sqrt2(a: i64, b: i64) -> Vec<BigRational> {
        alloc::vec![BigRational::from_integer(a.into()), BigRational::from_integer(b.into())]
    }

    /// diag(1 + sqrt 2, sqrt 2 - 1) over Q(sqrt 2), both places split.
    fn silver() -> SemisimpleElement {
        let spec = SemisimpleElementSpec::new(
            parse_poly("x^2 - 2").unwrap(),
            alloc::vec![alloc::vec![sqrt2(1, 1), sqrt2(0, 0)], alloc::vec![sqrt2(0, 0), sqrt2(-1, 1)]],
            alloc::vec![Place { embedding: 0, compact: false }, Place { embedding: 1, compact: false }],
        );
        SemisimpleElement::new(&spec).unwrap()
    }

    /// [[1 + sqrt 2, 1], [-1, 0]]: hyperbolic at sqrt 2, elliptic at -sqrt 2.
    fn half_compact(flag_other: bool) -> Result<SemisimpleElement> {
        let spec = SemisimpleElementSpec::new(
            parse_poly("x^2 - 2").unwrap(),
            alloc::vec![alloc::vec![sqrt2(1, 1), sqrt2(1, 0)], alloc::vec![sqrt2(-1, 0), sqrt2(0, 0)]],
            alloc::vec![Place { embedding: 0, compact: !flag_other }, Place { embedding: 1, compact: flag_other }],
        );
        SemisimpleElement::new(&spec)
    }

    #[test]
    fn silver_fixture() {
        let el = silver();
        let s = el.eigenvalue_set();
        assert!(s.hyp.iter().any(|v| *v.minpoly() == parse_poly("x^2 - 6x + 1").unwrap()));
        // four root values of modulus 3 + 2 sqrt 2 or its inverse
        let l = length(&el, &eps(20)).unwrap();
        let want = 2.0 * (3.0f64 + 2.0 * 2f64.sqrt()).ln();
        assert!((l.mid_f64() - want).abs() < 1e-12);
        let ones = BoundParams { c_n: None, c1: Some(BigRational::one()), c2: Some(BigRational::one()) };
        let r = spectrum_cyclic_check(&[f1(), el], 32, Some(&ones), &eps(10)).unwrap();
        match &r.pairs[0].outcome {
            PairOutcome::Independent { bound: Some(b), .. } => {
                assert_eq!(b.deg_k, 2);
                assert!(b.bound.is_some());
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn compact_places() {
        let el = half_compact(false).unwrap();
        check_compact_places(&el).unwrap();
        let s = el.eigenvalue_set();
        // the root values are Salem numbers of degree 4 and their inverses
        assert_eq!(s.hyp.len(), 2);
        assert!(s.ell.is_empty());
        let l = length(&el, &eps(20)).unwrap();
        assert!(l.lo.is_positive());
        let bad = half_compact(true).unwrap();
        assert_eq!(length(&bad, &eps(10)).unwrap_err(), Error::CompactPlaceViolation { place: 1 });
    }

    #[test]
    fn w_and_degree_bound() {
        let ctx = crate::galois::splitting_context(&parse_poly("x^2 - 3x + 1").unwrap(), &IntPolynomial::x()).unwrap();
        let a = AlgebraicNumber::from_root(&parse_poly("x^2 - 3x + 1").unwrap(), 1).unwrap();
        assert_eq!(w_value(&a, &ctx).unwrap(), BigRational::one());
        let r = check_degree_bound(&a, &ctx).unwrap();
        assert!(r.holds && r.degree == 2);
        assert_eq!(check_degree_bound(&AlgebraicNumber::from_int(-1), &ctx).unwrap_err(), Error::VacuousBound);

        let salem = parse_poly("x^4 - x^3 - x^2 - x + 1").unwrap();
        let sctx = crate::galois::splitting_context(&salem, &IntPolynomial::x()).unwrap();
        let s = AlgebraicNumber::from_root(&salem, 3).unwrap();
        assert_eq!(w_value(&s, &sctx).unwrap(), BigRational::new(1.into(), 2.into()));
        assert!(check_degree_bound(&s, &sctx).unwrap().holds);
        assert_eq!(w_value(&s, &ctx).unwrap_err(), Error::NotInField);
    }

    #[test]
    fn prod1() {
        let el = f1();
        let ctx = eigen_context(&el).unwrap();
        assert_eq!(ctx.order(), 2);
        assert!(check_prod1(&el, &ctx).unwrap().iter().all(|(_, b)| *b));
        let d = diag3();
        let dctx = eigen_context(&d).unwrap();
        assert!(check_prod1(&d, &dctx).unwrap().iter().all(|(_, b)| !*b));
    }
}
