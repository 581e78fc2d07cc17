use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use salemforge_core::bounds::{amoroso_david_rhs, cor35_rhs, thm_d_length_bound, BoundParams};
use salemforge_core::galois::splitting_context;
use salemforge_core::heights::mahler_poly;
use salemforge_core::intpoly::{factor_over_integers, parse_poly, IntPolynomial};
use salemforge_core::lattice::{length, SemisimpleElement, SemisimpleElementSpec};
use salemforge_core::reldep::{cocycle_value, find_relation, p_sigma, verify_relation};
use salemforge_core::AlgebraicNumber;

fn eps(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(k))
}

fn nonzero_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..=6, 2..7)
        .prop_map(|c| IntPolynomial::from_i64(&c))
        .prop_filter("nonconstant", |p| p.degree() >= 1)
}

/// A quadratic or quartic unit of infinite order.
fn unit() -> impl Strategy<Value = AlgebraicNumber> {
    prop_oneof![
        (3i64..12, 0usize..2).prop_map(|(t, i)| (format!("x^2 - {t}x + 1"), i)),
        (1i64..8, 0usize..2).prop_map(|(t, i)| (format!("x^2 - {t}x - 1"), i)),
        Just(("x^4 - x^3 - x^2 - x + 1".to_string(), 3)),
        Just(("x^4 - x - 1".to_string(), 3)),
    ]
    .prop_map(|(p, i)| AlgebraicNumber::from_root(&parse_poly(&p).unwrap(), i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn display_parse_round_trip(p in nonzero_poly()) {
        prop_assert_eq!(parse_poly(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn factors_multiply_back(p in nonzero_poly()) {
        let mut prod = IntPolynomial::one();
        for (f, e) in factor_over_integers(&p).unwrap() {
            prod = prod.mul(&f.pow(e));
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn mahler_is_multiplicative(p in nonzero_poly(), q in nonzero_poly()) {
        let e = eps(12);
        let mp = mahler_poly(&p, &e).unwrap();
        let mq = mahler_poly(&q, &e).unwrap();
        let mpq = mahler_poly(&p.mul(&q), &e).unwrap();
        prop_assert!(mpq.intersects(&mp.mul(&mq, 128)));
    }

    #[test]
    fn mahler_is_reversal_invariant(p in nonzero_poly()) {
        prop_assume!(!p.constant_term().is_zero());
        let e = eps(12);
        prop_assert!(mahler_poly(&p, &e).unwrap().intersects(&mahler_poly(&p.reversed(), &e).unwrap()));
    }

    #[test]
    fn inverse_and_powers(a in unit(), m in -4i64..=4, n in -4i64..=4) {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        let lhs = a.pow(m).unwrap().mul(&a.pow(n).unwrap());
        prop_assert_eq!(lhs, a.pow(m + n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn planted_relations_are_recovered(g in unit(), s in -8i64..=8, t in -8i64..=8) {
        prop_assume!(s != 0 && t != 0);
        let a = g.pow(s).unwrap();
        let b = g.pow(t).unwrap();
        let r = find_relation(&a, &b, 16).unwrap().expect("planted relation");
        prop_assert!(r.verified && verify_relation(&a, &b, r.m, r.n));
        // the minimal relation is (t, -s) divided by their gcd, up to sign
        let d = s.gcd(&t);
        prop_assert_eq!(r.m.abs() + r.n.abs(), (s.abs() + t.abs()) / d);
        prop_assert_eq!(r.m * s + r.n * t, 0);
    }

    #[test]
    fn relations_are_symmetric(g in unit(), s in 1i64..=4, t in 1i64..=4) {
        let a = g.pow(s).unwrap();
        let b = g.pow(-t).unwrap();
        let ab = find_relation(&a, &b, 8).unwrap().unwrap();
        let ba = find_relation(&b, &a, 8).unwrap().unwrap();
        prop_assert_eq!((ab.m.abs(), ab.n.abs()), (ba.n.abs(), ba.m.abs()));
    }

    /// Hyperbolic elements of SL_2(Z) as words in the two unipotent
    /// generators.
    #[test]
    fn length_scales_with_powers(word in prop::collection::vec(1i64..3, 2..5)) {
        let mut m = [[1i64, 0], [0, 1]];
        for (i, k) in word.iter().enumerate() {
            let g = if i % 2 == 0 { [[1, *k], [0, 1]] } else { [[1, 0], [*k, 1]] };
            m = [
                [m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]],
                [m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]],
            ];
        }
        prop_assume!((m[0][0] + m[1][1]).abs() > 2);
        let spec = SemisimpleElementSpec::over_q(&[&m[0], &m[1]]);
        let l1 = length(&SemisimpleElement::new(&spec).unwrap(), &eps(20)).unwrap();
        for n in 2..=4u32 {
            let el = SemisimpleElement::new(&spec.power(n).unwrap()).unwrap();
            let ln = length(&el, &eps(20)).unwrap();
            prop_assert!(ln.intersects(&l1.mul_int(n as i64, 128)));
        }
        // root values come in inverse pairs
        let set = SemisimpleElement::new(&spec).unwrap().eigenvalue_set();
        for (i, j, v) in &set.root_values {
            let w = &set.root_values.iter().find(|(a, b, _)| a == j && b == i).unwrap().2;
            prop_assert!(v.mul(w).is_one());
        }
    }
}

fn all_contexts() -> Vec<(salemforge_core::galois::GaloisContext, AlgebraicNumber)> {
    let x = IntPolynomial::x();
    let q5 = splitting_context(&parse_poly("x^2 - x - 1").unwrap(), &x).unwrap();
    let bq = splitting_context(&parse_poly("x^4 - 10x^2 + 1").unwrap(), &x).unwrap();
    let root = |s: &str, i| AlgebraicNumber::from_root(&parse_poly(s).unwrap(), i).unwrap();
    vec![
        (q5.clone(), root("x^2 - 3x + 1", 1)),
        (q5.clone(), root("x^2 - x - 1", 1)),
        (q5, root("x^2 - 7x + 1", 0)),
        (bq.clone(), root("x^2 - 2x - 1", 1)),
        (bq.clone(), root("x^2 - 4x + 1", 1)),
        (bq, root("x^2 - 10x + 1", 1)),
    ]
}

#[test]
fn cocycle_laws() {
    for (ctx, a) in all_contexts() {
        let c = |g: usize, x: &AlgebraicNumber| cocycle_value(&ctx, g, x, 32).unwrap();
        for s in 0..ctx.order() {
            assert!(matches!(c(s, &a), 1 | -1));
            let sa = ctx.apply(s, &a).unwrap();
            for t in 0..ctx.order() {
                assert_eq!(c(ctx.compose(t, s), &a), c(t, &sa) * c(s, &a));
            }
            let mut pow = ctx.identity();
            for n in 1..=ctx.order() as u32 {
                pow = ctx.compose(s, pow);
                assert_eq!(c(pow, &a), c(s, &a).pow(n));
            }
        }
        assert_eq!(p_sigma(&ctx, ctx.identity(), &a, 32).unwrap(), 1);
    }
}

fn ones() -> BoundParams {
    let one = Some(BigRational::one());
    BoundParams { c_n: one.clone(), c1: one.clone(), c2: one }
}

#[test]
fn amoroso_david_decreases_in_degree() {
    for n in 1..=2 {
        let vals: Vec<_> = (1..=100).map(|d| amoroso_david_rhs(n, d, &ones(), &eps(5)).unwrap()).collect();
        for w in vals.windows(2) {
            assert!(w[1].hi < w[0].lo, "n = {n}");
        }
    }
}

#[test]
fn thm_d_squares_back() {
    for (deg, c1, c2) in [(2u64, 1i64, 1i64), (10, 1, 1), (10, 4, 3), (57, 2, 5)] {
        let p = BoundParams {
            c_n: None,
            c1: Some(BigRational::from_integer(c1.into())),
            c2: Some(BigRational::from_integer(c2.into())),
        };
        let b = thm_d_length_bound(deg, &p, &eps(30)).unwrap();
        let c = cor35_rhs(deg, &p, &eps(30)).unwrap();
        assert!(b.sqr(200).intersects(&c));
        let mut q = p.clone();
        q.c1 = Some(BigRational::from_integer((4 * c1).into()));
        let b4 = thm_d_length_bound(deg, &q, &eps(30)).unwrap();
        assert!(b4.intersects(&b.mul_int(2, 200)));
    }
}
