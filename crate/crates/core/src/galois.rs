//! Splitting fields over a base field and the Galois action on a set of
//! roots, with every automorphism certified by exact identities.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algnum::{disk_meets_rect, AlgebraicNumber};
use crate::error::{Error, Result};
use crate::intpoly::{factor_over_integers, isolate_roots_bits, IntPolynomial};
use crate::limits::splitting_degree_cap;
use crate::numfield::{FieldElem, NumberField};

/// A permutation of root indices: `g[i]` is the index of the image of root
/// `i`.
pub type Permutation = Vec<usize>;

#[derive(Clone, Debug)]
pub struct GaloisContext {
    base_field: IntPolynomial,
    base_root: AlgebraicNumber,
    field: NumberField,
    roots: Vec<AlgebraicNumber>,
    root_exprs: Vec<FieldElem>,
    base_expr: FieldElem,
    group: Vec<Permutation>,
    // image of the generator under each group element
    images: Vec<FieldElem>,
}

/// Splitting field of `p` over the field defined by `base`, embedded via
/// the first root of `base` in canonical order.
pub fn splitting_context(p: &IntPolynomial, base: &IntPolynomial) -> Result<GaloisContext> {
    let fs = factor_over_integers(base)?;
    if fs.len() != 1 || fs[0].1 != 1 || base.degree() == 0 {
        return Err(Error::Reducible);
    }
    let base_root = AlgebraicNumber::from_root(base, 0)?;
    splitting_context_at(p, &base_root)
}

/// Splitting field of `p` over `Q(base_root)`.
pub fn splitting_context_at(p: &IntPolynomial, base_root: &AlgebraicNumber) -> Result<GaloisContext> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = isolate_roots_bits(p, 32).len();
    let roots = (0..n).map(|i| AlgebraicNumber::from_root(p, i)).collect::<Result<Vec<_>>>()?;
    GaloisContext::for_roots(roots, base_root)
}

impl GaloisContext {
    /// The field `Q(base_root, roots)` acting on `roots`; the root set must
    /// be closed under the automorphisms fixing `base_root`.
    pub fn for_roots(roots: Vec<AlgebraicNumber>, base_root: &AlgebraicNumber) -> Result<GaloisContext> {
        let cap = splitting_degree_cap();
        let bdeg = base_root.degree();
        let mut field = NumberField::new(base_root.clone());
        let mut base_expr = field.theta();
        // generator as a rational combination of base root (slot 0) and roots
        let mut comb: Vec<BigRational> = alloc::vec![BigRational::zero(); roots.len() + 1];
        comb[0] = BigRational::from_integer(1.into());
        let mut exprs: Vec<Option<FieldElem>> = alloc::vec![None; roots.len()];
        for i in 0..roots.len() {
            if let Some(e) = field.express(&roots[i]) {
                exprs[i] = Some(e);
                continue;
            }
            let (k, c, t, rt) = field.adjoin(&roots[i]);
            if k.degree() > cap * bdeg {
                return Err(Error::DegreeLimit { degree: k.degree() / bdeg, limit: cap });
            }
            for e in exprs.iter_mut().flatten() {
                *e = k.compose(&e.0, &t);
            }
            base_expr = k.compose(&base_expr.0, &t);
            let cq = BigRational::from_integer(BigInt::from(c));
            for x in comb.iter_mut() {
                *x = &*x * &cq;
            }
            comb[i + 1] += BigRational::from_integer(1.into());
            exprs[i] = Some(rt);
            field = k;
        }
        let root_exprs: Vec<FieldElem> = exprs.into_iter().map(|e| e.unwrap()).collect();
        let mut ctx = GaloisContext {
            base_field: base_root.minpoly().clone(),
            base_root: base_root.clone(),
            field,
            roots,
            root_exprs,
            base_expr,
            group: Vec::new(),
            images: Vec::new(),
        };
        ctx.find_group(&comb)?;
        Ok(ctx)
    }

    fn find_group(&mut self, comb: &[BigRational]) -> Result<()> {
        let k = &self.field;
        let mut found: Vec<(Permutation, FieldElem)> = Vec::new();
        let conj = k.generator().conjugates();
        for tj in &conj {
            // candidate permutation from the numeric images of the roots
            let Some(perm) = self.numeric_images(tj) else { continue };
            // sigma(theta) from the combination, then exact checks
            let mut s = k.scale(&self.base_expr, &comb[0]);
            for (i, c) in comb[1..].iter().enumerate() {
                if !c.is_zero() {
                    s = k.add(&s, &k.scale(&self.root_exprs[perm[i]], c));
                }
            }
            if !k.compose(k.modulus(), &s).is_zero() {
                continue;
            }
            if k.compose(&self.base_expr.0, &s) != self.base_expr {
                continue;
            }
            let ok = (0..self.roots.len()).all(|i| k.compose(&self.root_exprs[i].0, &s) == self.root_exprs[perm[i]]);
            if ok && !found.iter().any(|(p, _)| *p == perm) {
                found.push((perm, s));
            }
        }
        let expected = k.degree() / self.base_root.degree();
        if found.len() != expected {
            return Err(Error::InvalidArgument(alloc::format!(
                "found {} automorphisms for an extension of degree {}",
                found.len(),
                expected
            )));
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        let (group, images) = found.into_iter().unzip();
        self.group = group;
        self.images = images;
        Ok(())
    }

    /// The permutation induced by the embedding sending the generator to
    /// `tj`, or `None` if it moves the base root.
    fn numeric_images(&self, tj: &AlgebraicNumber) -> Option<Permutation> {
        let k = &self.field;
        let mut bits = 32;
        loop {
            let b = k.eval_at(&self.base_expr, tj, bits);
            let base_here = self.base_root.enclosure(bits);
            if !b.intersects(&base_here) {
                return None;
            }
            let mut perm = Vec::with_capacity(self.roots.len());
            let mut ambiguous = false;
            for e in &self.root_exprs {
                let v = k.eval_at(e, tj, bits);
                let hits: Vec<usize> = (0..self.roots.len())
                    .filter(|&r| {
                        let rr = &self.roots[r];
                        if rr.is_rational() {
                            v.intersects(&rr.enclosure(bits))
                        } else {
                            disk_meets_rect(rr.selector(), &v)
                        }
                    })
                    .collect();
                if hits.len() != 1 {
                    ambiguous = true;
                    break;
                }
                perm.push(hits[0]);
            }
            if !ambiguous {
                let base_root_only = self.base_root.is_rational()
                    || disk_meets_rect(self.base_root.selector(), &b)
                        && self.base_root.conjugates().iter().filter(|c| disk_meets_rect(c.selector(), &b)).count()
                            == 1;
                if base_root_only {
                    return Some(perm);
                }
            }
            bits *= 2;
            assert!(bits < 1 << 16, "could not match root images");
        }
    }

    pub fn base_field(&self) -> &IntPolynomial {
        &self.base_field
    }

    pub fn base_root(&self) -> &AlgebraicNumber {
        &self.base_root
    }

    /// The splitting field as an absolute field over Q.
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Defining polynomial of the splitting field over Q.
    pub fn splitting_poly(&self) -> &IntPolynomial {
        self.field.generator().minpoly()
    }

    pub fn roots(&self) -> &[AlgebraicNumber] {
        &self.roots
    }

    pub fn root_exprs(&self) -> &[FieldElem] {
        &self.root_exprs
    }

    pub fn base_expr(&self) -> &FieldElem {
        &self.base_expr
    }

    pub fn group(&self) -> &[Permutation] {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.len()
    }

    pub fn identity(&self) -> usize {
        let id: Permutation = (0..self.roots.len()).collect();
        self.index_of(&id).expect("identity is in the group")
    }

    pub fn index_of(&self, g: &[usize]) -> Option<usize> {
        self.group.iter().position(|h| h.as_slice() == g)
    }

    /// `g o h`: first `h`, then `g`.
    pub fn compose(&self, g: usize, h: usize) -> usize {
        let p: Permutation = self.group[h].iter().map(|&i| self.group[g][i]).collect();
        self.index_of(&p).expect("group is closed")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let mut p = alloc::vec![0; self.roots.len()];
        for (i, &j) in self.group[g].iter().enumerate() {
            p[j] = i;
        }
        self.index_of(&p).expect("group is closed")
    }

    /// Image of the generator of the splitting field under group element
    /// `g`.
    pub fn generator_image(&self, g: usize) -> &FieldElem {
        &self.images[g]
    }

    /// Exact image of a field element.
    pub fn apply_elem(&self, g: usize, e: &FieldElem) -> FieldElem {
        self.field.compose(&e.0, &self.images[g])
    }

    pub fn express(&self, a: &AlgebraicNumber) -> Result<FieldElem> {
        self.field.express(a).ok_or(Error::NotInField)
    }

    /// Image of `a` under group element `g`.
    pub fn apply(&self, g: usize, a: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        let e = self.express(a)?;
        Ok(self.field.to_algebraic(&self.apply_elem(g, &e)))
    }

    /// Indices of the group elements fixing `e`.
    pub fn stabilizer_elem(&self, e: &FieldElem) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.apply_elem(g, e) == *e).collect()
    }
}

/// Image of `a` under the automorphism acting on roots as `g`.
pub fn apply_auto(ctx: &GaloisContext, g: &[usize], a: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    let gi = ctx.index_of(g).ok_or_else(|| Error::InvalidArgument("permutation is not in the group".into()))?;
    ctx.apply(gi, a)
}

/// The subgroup fixing `a`.
pub fn stabilizer(ctx: &GaloisContext, a: &AlgebraicNumber) -> Result<Vec<Permutation>> {
    let e = ctx.express(a)?;
    Ok(ctx.stabilizer_elem(&e).into_iter().map(|g| ctx.group[g].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::parse_poly;

    fn p(s: &str) -> IntPolynomial {
        parse_poly(s).unwrap()
    }

    fn q() -> IntPolynomial {
        p("x - 1")
    }

    #[test]
    fn quadratic() {
        let ctx = splitting_context(&p("x^2 - 3x + 1"), &q()).unwrap();
        assert_eq!(ctx.group(), &[alloc::vec![0, 1], alloc::vec![1, 0]]);
        let a = &ctx.roots()[1];
        assert_eq!(&apply_auto(&ctx, &[1, 0], a).unwrap(), &ctx.roots()[0]);
        let eps = AlgebraicNumber::from_root(&p("x^2 - x - 1"), 1).unwrap();
        let img = apply_auto(&ctx, &[1, 0], &eps).unwrap();
        assert_eq!(img, eps.inv().unwrap().neg());
    }

    #[test]
    fn rational_roots() {
        let ctx = splitting_context(&p("x^2 - 3x + 2"), &q()).unwrap();
        assert_eq!(ctx.order(), 1);
        assert_eq!(ctx.field().degree(), 1);
    }

    #[test]
    fn biquadratic() {
        let ctx = splitting_context(&p("x^4 - 10x^2 + 1"), &q()).unwrap();
        assert_eq!(ctx.order(), 4);
        for g in 0..4 {
            if g != ctx.identity() {
                assert_eq!(ctx.compose(g, g), ctx.identity());
            }
        }
        let s2 = AlgebraicNumber::from_root(&p("x^2 - 2"), 1).unwrap();
        assert_eq!(stabilizer(&ctx, &s2).unwrap().len(), 2);
        assert_eq!(stabilizer(&ctx, &ctx.roots()[0]).unwrap().len(), 1);
        assert_eq!(stabilizer(&ctx, &AlgebraicNumber::from_int(3)).unwrap().len(), 4);
    }

    #[test]
    fn salem_quartic_is_dihedral() {
        let ctx = splitting_context(&p("x^4 - x^3 - x^2 - x + 1"), &q()).unwrap();
        assert_eq!(ctx.order(), 8);
        assert_eq!(ctx.field().degree(), 8);
        let ids = (0..8).filter(|&g| ctx.compose(g, g) == ctx.identity()).count();
        // D4: identity, 5 involutions; two elements of order 4
        assert_eq!(ids, 6);
    }

    #[test]
    fn relative_to_base() {
        // over Q(sqrt 2), x^4 - 10x^2 + 1 splits into quadratics
        let ctx = splitting_context(&p("x^4 - 10x^2 + 1"), &p("x^2 - 2")).unwrap();
        assert_eq!(ctx.order(), 2);
        let s2 = AlgebraicNumber::from_root(&p("x^2 - 2"), 0).unwrap();
        assert_eq!(stabilizer(&ctx, &s2).unwrap().len(), 2);
        assert!(matches!(splitting_context(&p("x^2 - 2x + 1"), &q()), Err(Error::NotSquarefree)));
    }
}
