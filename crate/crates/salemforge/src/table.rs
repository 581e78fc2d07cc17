//! Plain-text rendering of a report: one `path  value` line per leaf, with
//! intervals shortened to decimal enclosures.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::report::parse_interval;

const DIGITS: usize = 15;

/// Rounds `q` towards negative infinity (`up = false`) or positive infinity
/// to `DIGITS` decimals.
fn decimal(q: &BigRational, up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), DIGITS);
    let scaled = q * BigRational::from_integer(scale.clone());
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let digits = n.abs().to_string();
    let digits = format!("{digits:0>width$}", width = DIGITS + 1);
    let (int, frac) = digits.split_at(digits.len() - DIGITS);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn walk(path: &str, v: &Value, out: &mut Vec<(String, String)>) {
    if let Some((lo, hi)) = parse_interval(v) {
        let text = if lo == hi && (lo.is_integer() || lo.is_zero()) {
            lo.to_string()
        } else {
            format!("[{}, {}]", decimal(&lo, false), decimal(&hi, true))
        };
        out.push((path.into(), text));
        return;
    }
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(&p, x, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                walk(&format!("{path}[{i}]"), x, out);
            }
        }
        other => out.push((path.into(), leaf(other))),
    }
}

pub fn render(report: &Value) -> String {
    let mut rows = Vec::new();
    walk("", report, &mut rows);
    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}
