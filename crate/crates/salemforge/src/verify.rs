//! Offline re-validation of a report. The request echoed in `inputs` is
//! rerun; exact fields must match, intervals must overlap, and relation
//! and cocycle certificates are rechecked directly.

use serde_json::{json, Value};

use salemforge_core::reldep::verify_relation;

use crate::commands::{construct_input, run, Request};
use crate::report::parse_interval;
use crate::{CliError, EXIT_INVALID};

fn compare(path: &str, old: &Value, new: &Value, out: &mut Vec<String>) {
    if let (Some((a, b)), Some((c, d))) = (parse_interval(old), parse_interval(new)) {
        if a > b || b < c || d < a {
            out.push(format!("{path}: intervals do not overlap"));
        }
        return;
    }
    match (old, new) {
        (Value::Object(x), Value::Object(y)) => {
            if x.len() != y.len() || x.keys().any(|k| !y.contains_key(k)) {
                out.push(format!("{path}: fields differ"));
                return;
            }
            for (k, v) in x {
                compare(&format!("{path}.{k}"), v, &y[k], out);
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                out.push(format!("{path}: lengths differ"));
                return;
            }
            for (i, (a, b)) in x.iter().zip(y).enumerate() {
                compare(&format!("{path}[{i}]"), a, b, out);
            }
        }
        _ if old != new => out.push(format!("{path}: {old} != {new}")),
        _ => {}
    }
}

fn relation_check(req: &Request, report: &Value) -> Result<Option<bool>, CliError> {
    let Request::Dependence { a, b, .. } = req else { return Ok(None) };
    let rel = &report["certificates"]["relation"];
    if rel.is_null() {
        return Ok(None);
    }
    let (Some(m), Some(n)) = (rel["m"].as_i64(), rel["n"].as_i64()) else {
        return Ok(Some(false));
    };
    Ok(Some(verify_relation(&a.resolve()?, &b.resolve()?, m, n)))
}

/// `sigma(a)^p = a^(c p)` for every row of the cocycle table.
fn cocycle_check(req: &Request, report: &Value) -> Result<Option<bool>, CliError> {
    let Request::ConstructSalem { target, .. } = req else { return Ok(None) };
    let (ctx, a, _) = construct_input(target)?;
    let Some(rows) = report["certificates"]["cocycle_table"].as_array() else {
        return Ok(Some(false));
    };
    for row in rows {
        let (Some(p), Some(c)) = (row["p_sigma"].as_i64(), row["cocycle"].as_i64()) else {
            continue;
        };
        let perm: Option<Vec<usize>> =
            row["sigma"].as_array().map(|s| s.iter().filter_map(|x| x.as_u64().map(|v| v as usize)).collect());
        let Some(g) = perm.and_then(|s| ctx.index_of(&s)) else {
            return Ok(Some(false));
        };
        let image = ctx.apply(g, &a)?;
        if !(c == 1 || c == -1) || image.pow(p)? != a.pow(c * p)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

pub fn verify(report: &Value) -> Result<Value, CliError> {
    let req = Request::from_report(report)?;
    let fresh = match run(&req) {
        Ok(v) => v,
        Err(CliError { partial: Some(v), .. }) => v,
        Err(e) => return Err(e),
    };
    let mut mismatches = Vec::new();
    if report.get("command") != fresh.get("command") || report.get("inputs") != fresh.get("inputs") {
        mismatches.push("inputs: not a canonical echo".to_string());
    }
    for key in ["results", "certificates", "verdicts"] {
        compare(key, &report[key], &fresh[key], &mut mismatches);
    }
    let mut checks = vec![json!({ "check": "recomputation", "ok": mismatches.is_empty(), "mismatches": mismatches })];
    if let Some(ok) = relation_check(&req, report)? {
        checks.push(json!({ "check": "relation", "ok": ok }));
    }
    if let Some(ok) = cocycle_check(&req, report)? {
        checks.push(json!({ "check": "cocycle_table", "ok": ok }));
    }
    let all_ok = checks.iter().all(|c| c["ok"] == true);
    let out = json!({
        "command": "verify",
        "inputs": { "command": req.name() },
        "results": { "checks": checks },
        "verdicts": { "all_ok": all_ok },
    });
    if !all_ok {
        return Err(CliError { code: EXIT_INVALID, message: "report failed verification".into(), partial: Some(out) });
    }
    Ok(out)
}
