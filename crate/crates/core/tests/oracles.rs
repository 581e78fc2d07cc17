// Values below were computed separately with 40-digit mpmath root products
// and closed forms, then frozen here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use salemforge_core::arith::Interval;
use salemforge_core::bounds::{amoroso_david_rhs, cor35_rhs, thm_d_length_bound, BoundParams};
use salemforge_core::heights::{log_mahler, mahler_poly};
use salemforge_core::intpoly::parse_poly;
use salemforge_core::lattice::{height_gamma, length, mahler_gamma, SemisimpleElement, SemisimpleElementSpec};
use salemforge_core::AlgebraicNumber;

fn eps(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(k))
}

fn decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let neg = int.starts_with('-');
    let digits = format!("{}{}", int.trim_start_matches('-'), frac);
    let n: BigInt = digits.parse().unwrap();
    let q = BigRational::new(n, BigInt::from(10).pow(frac.len() as u32));
    if neg {
        -q
    } else {
        q
    }
}

/// The oracle, given to `digits` decimals, lies within the interval widened
/// by one unit in the last place.
fn agrees(iv: &Interval, oracle: &str) {
    let digits = oracle.split_once('.').map_or(0, |(_, f)| f.len()) as u32;
    let o = decimal(oracle);
    let slack = eps(digits);
    assert!(
        iv.lo_rational() - &slack <= o && o <= iv.hi_rational() + &slack,
        "{oracle} not within [{}, {}]",
        iv.lo.to_f64(),
        iv.hi.to_f64()
    );
}

fn ones() -> BoundParams {
    let one = Some(BigRational::one());
    BoundParams { c_n: one.clone(), c1: one.clone(), c2: one }
}

#[test]
fn lehmer_measure() {
    let p = parse_poly("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1").unwrap();
    let m = mahler_poly(&p, &eps(40)).unwrap();
    agrees(&m, "1.17628081825991750654407033847403505069341580656469525983011");
}

#[test]
fn salem_quartic_roots() {
    let p = parse_poly("x^4 - x^3 - x^2 - x + 1").unwrap();
    let real: Vec<f64> = (0..4)
        .map(|i| AlgebraicNumber::from_root(&p, i).unwrap())
        .filter(|a| a.is_real())
        .map(|a| a.enclosure(80).re.mid_f64())
        .collect();
    assert_eq!(real.len(), 2);
    assert!((real[0] - 0.580691831992952401532541421581).abs() < 1e-15);
    assert!((real[1] - 1.722083805739042245027069212153).abs() < 1e-15);
    let c = AlgebraicNumber::from_root(&p, 0).unwrap().enclosure(80);
    assert!((c.re.mid_f64() + 0.651387818865997323279805316868).abs() < 1e-15);
    assert!((c.im.mid_f64().abs() - 0.758744956775989820904814328865).abs() < 1e-15);
    let m = mahler_poly(&p, &eps(25)).unwrap();
    agrees(&m, "1.722083805739042245027069212153");
}

#[test]
fn pair_modulus_of_non_salem_quartic() {
    let p = parse_poly("x^4 - x - 1").unwrap();
    let pair = AlgebraicNumber::from_root(&p, 1).unwrap();
    assert!(!pair.is_real());
    let m = pair.abs_at_selector(&eps(20));
    assert!((m.mid_f64() - 1.0633369388213882).abs() < 1e-14);
}

#[test]
fn golden_square_log() {
    let a = AlgebraicNumber::from_root(&parse_poly("x^2 - 3x + 1").unwrap(), 1).unwrap();
    agrees(&log_mahler(&a, &eps(30)).unwrap(), "0.962423650119206894995517826849");
}

#[test]
fn f1_values() {
    let el = SemisimpleElement::new(&SemisimpleElementSpec::over_q(&[&[2, 1], &[1, 1]])).unwrap();
    agrees(&mahler_gamma(&el, &eps(30)).unwrap(), "3.84969460047682757998207130739");
    agrees(&height_gamma(&el, &eps(30)).unwrap(), "1.92484730023841378999103565370");
    agrees(&length(&el, &eps(30)).unwrap(), "2.72214515749440161259139226073");
}

#[test]
fn diagonal_length() {
    let spec = SemisimpleElementSpec::new(
        salemforge_core::IntPolynomial::x(),
        vec![
            vec![vec![BigRational::from_integer(2.into())], vec![]],
            vec![vec![], vec![BigRational::new(1.into(), 2.into())]],
        ],
        vec![salemforge_core::lattice::Place { embedding: 0, compact: false }],
    );
    let el = SemisimpleElement::new(&spec).unwrap();
    agrees(&length(&el, &eps(30)).unwrap(), "1.96051628693709438342780344727");
}

#[test]
fn bound_values() {
    agrees(&amoroso_david_rhs(1, 1, &ones(), &eps(30)).unwrap(), "0.754165466958947565480533077547");
    agrees(&thm_d_length_bound(10, &ones(), &eps(30)).unwrap(), "2.08397332493305160264150864341");
    agrees(&cor35_rhs(8, &ones(), &eps(30)).unwrap(), "3.84718677570390241962646581601");
    agrees(&cor35_rhs(9, &ones(), &eps(30)).unwrap(), "4.09607651982076827126408074581");
}
