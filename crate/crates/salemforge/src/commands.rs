//! One function per subcommand. Each takes a [`Request`] and returns the
//! report as JSON; the request is echoed under `inputs` so that `verify`
//! can rerun it.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use salemforge_core::bounds::{self, BoundParams, CONDITIONAL};
use salemforge_core::galois::{splitting_context, GaloisContext};
use salemforge_core::heights::{classify_with, log_mahler_poly, mahler_alg, mahler_poly, weil_height};
use salemforge_core::intpoly::{factor_over_integers, is_cyclotomic};
use salemforge_core::lattice::{
    check_compact_places, check_mahler_height_lemma, check_prod1, eigen_context, length, multiplicative_rank,
    spectrum_cyclic_check, PairOutcome, SemisimpleElement,
};
use salemforge_core::reldep::{cocycle_value, construct_salem, find_relation, p_sigma, verify_power_identity};
use salemforge_core::{AlgebraicNumber, Error, IntPolynomial};

use crate::format::{parse_rational, poly, ConstructFile, SpecFile};
use crate::report::{self, classification, comparison, interval, number, numbers, rat};
use crate::CliError;

/// A root of a polynomial, by canonical index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberRef {
    pub poly: String,
    pub index: usize,
}

impl NumberRef {
    pub fn resolve(&self) -> Result<AlgebraicNumber, CliError> {
        Ok(AlgebraicNumber::from_root(&poly(&self.poly)?, self.index)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstructTarget {
    /// The largest root value of an element, acted on by the Galois group
    /// of its eigenvalues over the trace field.
    Element {
        spec: SpecFile,
    },
    Number(ConstructFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Request {
    Mahler { poly: String, precision: String },
    Classify { poly: String, index: usize, strict: bool, precision: String },
    Dependence { a: NumberRef, b: NumberRef, max_exp: u32 },
    ConstructSalem { target: ConstructTarget, max_exp: u32 },
    Length { spec: SpecFile, precision: String, max_exp: u32 },
    Spectrum { specs: Vec<SpecFile>, precision: String, max_exp: u32, c1: Option<String>, c2: Option<String> },
    Bound { bound: BoundRequest },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BoundRequest {
    Kappa { n: u64 },
    AmorosoDavid { n: u64, d: u64, c_n: String, precision: String },
    Cor35 { deg: u64, c1: String, c2: String, precision: String },
    ThmD { deg: u64, c1: String, c2: String, precision: String },
    TwoLength { deg: u64, c1: String, c2: String, precision: String },
}

impl Request {
    pub fn name(&self) -> &'static str {
        match self {
            Request::Mahler { .. } => "mahler",
            Request::Classify { .. } => "classify",
            Request::Dependence { .. } => "dependence",
            Request::ConstructSalem { .. } => "construct-salem",
            Request::Length { .. } => "length",
            Request::Spectrum { .. } => "spectrum",
            Request::Bound { .. } => "bound",
        }
    }

    /// The request without its `command` tag.
    pub fn inputs(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("requests serialize");
        v.as_object_mut().expect("tagged enum").remove("command");
        v
    }

    pub fn from_report(report: &Value) -> Result<Request, CliError> {
        let bad = |m: &str| CliError::parse(format!("report: {m}"));
        let name = report.get("command").and_then(Value::as_str).ok_or_else(|| bad("missing command"))?;
        let mut inputs =
            report.get("inputs").and_then(Value::as_object).cloned().ok_or_else(|| bad("missing inputs"))?;
        inputs.insert("command".into(), Value::String(name.into()));
        serde_json::from_value(Value::Object(inputs)).map_err(|e| bad(&e.to_string()))
    }
}

fn envelope(req: &Request, results: Value, certificates: Value, verdicts: Value) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), Value::String(req.name().into()));
    m.insert("inputs".into(), req.inputs());
    m.insert("results".into(), results);
    m.insert("certificates".into(), certificates);
    m.insert("verdicts".into(), verdicts);
    Value::Object(m)
}

pub fn run(req: &Request) -> Result<Value, CliError> {
    match req {
        Request::Mahler { poly, precision } => mahler(req, poly, precision),
        Request::Classify { poly, index, strict, precision } => classify(req, poly, *index, *strict, precision),
        Request::Dependence { a, b, max_exp } => dependence(req, a, b, *max_exp),
        Request::ConstructSalem { target, max_exp } => construct(req, target, *max_exp),
        Request::Length { spec, precision, max_exp } => length_cmd(req, spec, precision, *max_exp),
        Request::Spectrum { specs, precision, max_exp, c1, c2 } => {
            spectrum(req, specs, precision, *max_exp, c1.as_deref(), c2.as_deref())
        }
        Request::Bound { bound } => bound_cmd(req, bound),
    }
}

fn is_exactly_one(iv: &salemforge_core::arith::Interval) -> bool {
    iv.is_point() && iv.lo_rational() == BigRational::one()
}

fn mahler(req: &Request, text: &str, precision: &str) -> Result<Value, CliError> {
    let p = poly(text)?;
    let prec = parse_rational(precision)?;
    let m = mahler_poly(&p, &prec)?;
    let lm = log_mahler_poly(&p, &prec)?;
    let mut factors = Vec::new();
    for (f, e) in factor_over_integers(&p)? {
        let cyc = if f.is_monic() { is_cyclotomic(&f)? } else { None };
        factors.push(json!({
            "poly": report::poly(&f),
            "multiplicity": e,
            "cyclotomic_index": cyc,
            "measure": interval(&mahler_poly(&f, &prec)?),
        }));
    }
    let one = is_exactly_one(&m);
    let whole_cyc = factors.len() == 1 && factors[0]["multiplicity"] == 1;
    Ok(envelope(
        req,
        json!({ "poly": report::poly(&p), "degree": p.degree(), "measure": interval(&m), "log_measure": interval(&lm) }),
        json!({ "factorization": factors }),
        json!({
            "measure_is_one": one,
            "cyclotomic_index": if whole_cyc { factors[0]["cyclotomic_index"].clone() } else { Value::Null },
        }),
    ))
}

fn classify(req: &Request, text: &str, index: usize, strict: bool, precision: &str) -> Result<Value, CliError> {
    let a = AlgebraicNumber::from_root(&poly(text)?, index)?;
    let prec = parse_rational(precision)?;
    let c = classify_with(&a, strict);
    Ok(envelope(
        req,
        json!({
            "number": number(&a),
            "measure": interval(&mahler_alg(&a, &prec)?),
            "weil_height": interval(&weil_height(&a, &prec)?),
        }),
        json!({}),
        json!({
            "classification": classification(&c),
            "algebraic_integer": a.is_algebraic_integer(),
            "unit": a.is_unit(),
            "torsion_order": a.is_torsion(),
        }),
    ))
}

fn dependence(req: &Request, a: &NumberRef, b: &NumberRef, max_exp: u32) -> Result<Value, CliError> {
    let x = a.resolve()?;
    let y = b.resolve()?;
    let r = find_relation(&x, &y, max_exp)?;
    let status = if r.is_some() { "dependent" } else { "independent-up-to-bound" };
    Ok(envelope(
        req,
        json!({ "a": number(&x), "b": number(&y) }),
        json!({ "relation": r.map(|r| json!({ "m": r.m, "n": r.n, "verified": r.verified })) }),
        json!({ "status": status, "max_exp": max_exp }),
    ))
}

/// The context and number a construction request acts on, with a
/// description of where the number came from.
pub fn construct_input(target: &ConstructTarget) -> Result<(GaloisContext, AlgebraicNumber, Value), CliError> {
    match target {
        ConstructTarget::Element { spec } => {
            let el = SemisimpleElement::new(&spec.to_spec()?)?;
            let ctx = eigen_context(&el)?;
            let set = el.eigenvalue_set();
            let mut best: Option<(f64, usize, usize, AlgebraicNumber)> = None;
            for (i, j, v) in set.root_values {
                if v.is_torsion().is_some() {
                    continue;
                }
                let m = v.abs_interval(64).mid_f64();
                if best.as_ref().is_none_or(|b| m > b.0) {
                    best = Some((m, i, j, v));
                }
            }
            let (_, i, j, v) = best.ok_or_else(|| CliError::parse("element has no hyperbolic root value"))?;
            Ok((ctx, v, json!({ "root_value": [i, j] })))
        }
        ConstructTarget::Number(f) => {
            let a = AlgebraicNumber::from_root(&poly(&f.poly)?, f.index)?;
            let context = match &f.context {
                Some(t) => poly(t)?,
                None => a.minpoly().clone(),
            };
            let base = match &f.base {
                Some(t) => poly(t)?,
                None => IntPolynomial::x(),
            };
            let ctx = splitting_context(&context, &base)?;
            Ok((ctx, a, json!({ "context": report::poly(&context), "base": report::poly(&base) })))
        }
    }
}

fn construct(req: &Request, target: &ConstructTarget, max_exp: u32) -> Result<Value, CliError> {
    let (ctx, a, origin) = construct_input(target)?;
    let context = json!({
        "splitting_poly": report::poly(ctx.splitting_poly()),
        "base_field": report::poly(ctx.base_field()),
        "degree": ctx.field().degree(),
        "group_order": ctx.order(),
    });
    let mut table = Vec::new();
    let mut missing = 0;
    for g in 0..ctx.order() {
        let row = match (p_sigma(&ctx, g, &a, max_exp), cocycle_value(&ctx, g, &a, max_exp)) {
            (Ok(p), Ok(c)) => json!({ "sigma": ctx.group()[g], "p_sigma": p, "cocycle": c }),
            (Err(Error::NotDependent), _) | (_, Err(Error::NotDependent)) => {
                missing += 1;
                json!({ "sigma": ctx.group()[g], "p_sigma": null, "cocycle": null })
            }
            (Err(e), _) | (_, Err(e)) => return Err(e.into()),
        };
        table.push(row);
    }
    let results_head = json!({ "alpha": number(&a), "origin": origin, "context": context });
    if missing > 0 {
        let partial =
            envelope(req, results_head, json!({ "cocycle_table": table }), json!({ "status": "not-dependent" }));
        return Err(CliError::unresolved(
            format!("{missing} conjugate(s) not dependent on alpha within max_exp {max_exp}"),
            partial,
        ));
    }
    let c = construct_salem(&ctx, &a, max_exp)?;
    let mut results = results_head;
    let r = results.as_object_mut().expect("object");
    r.insert("p_total".into(), json!(c.p_total));
    r.insert("underline_alpha".into(), number(&c.underline_alpha));
    r.insert("stabilizer".into(), json!(c.stabilizer));
    r.insert("stabilizer_index".into(), json!(c.stabilizer_index()));
    r.insert("tilde_alpha".into(), number(&c.tilde_alpha));
    Ok(envelope(
        req,
        results,
        json!({ "cocycle_table": table }),
        json!({
            "classification": classification(&c.classification),
            "product_is_one": c.product_is_one,
            "equivariance_verified": c.equivariance_verified,
            "power_identity": verify_power_identity(&c),
        }),
    ))
}

fn element(file: &SpecFile) -> Result<SemisimpleElement, CliError> {
    let el = SemisimpleElement::new(&file.to_spec()?)?;
    check_compact_places(&el)?;
    Ok(el)
}

fn length_cmd(req: &Request, file: &SpecFile, precision: &str, max_exp: u32) -> Result<Value, CliError> {
    let prec = parse_rational(precision)?;
    let el = element(file)?;
    let l = length(&el, &prec)?;
    let lemma = check_mahler_height_lemma(&el, &prec)?;
    let rank = multiplicative_rank(&el, max_exp)?;
    let set = el.eigenvalue_set();
    let ctx = eigen_context(&el)?;
    let prod1: Vec<bool> = check_prod1(&el, &ctx)?.into_iter().map(|(_, b)| b).collect();
    let root_values: Vec<Value> =
        set.root_values.iter().map(|(i, j, v)| json!({ "i": i, "j": j, "value": number(v) })).collect();
    let report = envelope(
        req,
        json!({
            "size": el.size(),
            "field_degree": el.field_degree(),
            "eigen_factors": el.eigen_factors().iter().map(report::poly).collect::<Vec<_>>(),
            "eigenvalues": numbers(&set.eigenvalues),
            "root_values": root_values,
            "hyp": numbers(&set.hyp),
            "ell": numbers(&set.ell),
            "unit_modulus": numbers(&set.unit_modulus),
            "length": interval(&l),
            "m_f": interval(&lemma.m_f),
            "m_gamma": interval(&lemma.m_gamma),
            "h_gamma": interval(&lemma.h_gamma),
            "k_gamma_degree": lemma.k_gamma_degree,
        }),
        json!({
            "rank": { "rank": rank.rank, "basis": numbers(&rank.basis), "certified": rank.certified },
        }),
        json!({
            "compact_places": "ok",
            "lemma": {
                "m_f_le_m_gamma": comparison(lemma.first),
                "h_gamma_le_m_gamma": comparison(lemma.lower),
                "m_gamma_le_deg_h_gamma": comparison(lemma.upper),
            },
            "galois_product_is_one": prod1,
        }),
    );
    if !rank.certified {
        return Err(CliError::unresolved("independence of the rank basis is unresolved", report));
    }
    Ok(report)
}

fn optional_param(v: Option<&str>) -> Result<Option<BigRational>, CliError> {
    v.map(parse_rational).transpose()
}

fn spectrum(
    req: &Request,
    files: &[SpecFile],
    precision: &str,
    max_exp: u32,
    c1: Option<&str>,
    c2: Option<&str>,
) -> Result<Value, CliError> {
    let prec = parse_rational(precision)?;
    let els = files.iter().map(element).collect::<Result<Vec<_>, _>>()?;
    let params = match (optional_param(c1)?, optional_param(c2)?) {
        (None, None) => None,
        (Some(c1), Some(c2)) => Some(BoundParams { c_n: None, c1: Some(c1), c2: Some(c2) }),
        _ => return Err(CliError::parse("--c1 and --c2 must be given together")),
    };
    let r = spectrum_cyclic_check(&els, max_exp, params.as_ref(), &prec)?;
    let mut pairs = Vec::new();
    for p in &r.pairs {
        pairs.push(match &p.outcome {
            PairOutcome::Cyclic { ratio } => json!({
                "i": p.i,
                "j": p.j,
                "outcome": "cyclic",
                "length_sq_ratio": ratio.as_ref().map(rat),
            }),
            PairOutcome::Independent { witness, bound } => json!({
                "i": p.i,
                "j": p.j,
                "outcome": "independent-up-to-bound",
                "witness": [number(&witness.0), number(&witness.1)],
                "bound": bound.as_ref().map(|b| json!({
                    "label": CONDITIONAL,
                    "deg_k": b.deg_k,
                    "lengths_sum": interval(&b.lengths_sum),
                    "two_length_bound": b.bound.as_ref().map(interval),
                    "applies": b.bound.is_some(),
                })),
            }),
        });
    }
    let all_cyclic = r.pairs.iter().all(|p| matches!(p.outcome, PairOutcome::Cyclic { .. }));
    Ok(envelope(
        req,
        json!({ "lengths": r.lengths.iter().map(interval).collect::<Vec<_>>() }),
        json!({ "pairs": pairs }),
        json!({ "all_cyclic": all_cyclic, "max_exp": max_exp }),
    ))
}

fn length_params(c1: &str, c2: &str) -> Result<BoundParams, CliError> {
    Ok(BoundParams { c_n: None, c1: Some(parse_rational(c1)?), c2: Some(parse_rational(c2)?) })
}

fn bound_cmd(req: &Request, b: &BoundRequest) -> Result<Value, CliError> {
    let conditional = json!({ "label": CONDITIONAL });
    let (results, verdicts) = match b {
        BoundRequest::Kappa { n } => (json!({ "kappa": bounds::kappa(*n)?.to_string() }), json!({})),
        BoundRequest::AmorosoDavid { n, d, c_n, precision } => {
            let p = BoundParams { c_n: Some(parse_rational(c_n)?), c1: None, c2: None };
            let v = bounds::amoroso_david_rhs(*n, *d, &p, &parse_rational(precision)?)?;
            (json!({ "value": interval(&v) }), conditional)
        }
        BoundRequest::Cor35 { deg, c1, c2, precision } => {
            let v = bounds::cor35_rhs(*deg, &length_params(c1, c2)?, &parse_rational(precision)?)?;
            (json!({ "value": interval(&v) }), conditional)
        }
        BoundRequest::ThmD { deg, c1, c2, precision } => {
            let v = bounds::thm_d_length_bound(*deg, &length_params(c1, c2)?, &parse_rational(precision)?)?;
            (json!({ "value": interval(&v) }), conditional)
        }
        BoundRequest::TwoLength { deg, c1, c2, precision } => {
            let v = bounds::two_length_bound(*deg, &length_params(c1, c2)?, &parse_rational(precision)?)?;
            (json!({ "value": interval(&v) }), conditional)
        }
    };
    Ok(envelope(req, results, json!({}), verdicts))
}
