//! JSON, CSV-row and text renderings of computed objects. Integers are
//! emitted as exact JSON numbers (arbitrary precision); rationals as strings.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Map, Number, Value};

use crate::combinatorics::Partition;
use crate::formulas::{DecompositionTable, GradedCharacter, StabilityReport};
use crate::koszul::TruncatedSeries;

/// Exact JSON number from any integer with a decimal `Display`.
pub fn number(v: impl ToString) -> Value {
    let s = v.to_string();
    Value::Number(s.parse::<Number>().expect("integer literal is a valid JSON number"))
}

pub fn int_array(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(number).collect())
}

pub fn rational_string(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

/// `{"n":4,"mu":"2,2","coeffs":[1,0,-4,0]}`
pub fn character_json(c: &GradedCharacter) -> Value {
    json!({
        "n": c.n(),
        "mu": c.mu().to_string(),
        "coeffs": int_array(c.coeffs()),
    })
}

/// `{"n":6,"degree":2,"multiplicities":[{"lambda":"4,2","cf":"V(2)","mult":3}]}`
pub fn decomposition_json(t: &DecompositionTable) -> Value {
    let rows: Vec<Value> = t
        .entries
        .iter()
        .map(|(l, m)| {
            json!({
                "lambda": l.lambda_bar.to_string(),
                "cf": l.cf_string(),
                "mult": number(m),
            })
        })
        .collect();
    json!({ "n": t.n, "degree": t.degree, "multiplicities": rows })
}

/// `{"3,1":"2","2,2":"1"}`
pub fn schur_json(m: &BTreeMap<Partition, BigRational>) -> Value {
    let mut out = Map::new();
    for (lam, c) in m.iter().rev() {
        out.insert(lam.to_string(), rational_string(c));
    }
    Value::Object(out)
}

/// `["1","2","4",…]`
pub fn series_json(s: &TruncatedSeries) -> Value {
    Value::Array(s.coeffs().iter().map(rational_string).collect())
}

fn cf_key(tail: &[usize]) -> String {
    if tail.is_empty() {
        "V(0)".to_string()
    } else {
        format!(
            "V({})",
            tail.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        )
    }
}

/// `{"k":1,"trajectory":{"V(1)":{"2":1,"3":2,…}},"stable_from":4}`; `null`
/// marks `n` at which the label is undefined.
pub fn stability_json(r: &StabilityReport) -> Value {
    let mut traj = Map::new();
    for (tail, per_n) in &r.trajectory {
        let mut row = Map::new();
        for (n, v) in per_n {
            row.insert(
                n.to_string(),
                v.as_ref().map(number).unwrap_or(Value::Null),
            );
        }
        traj.insert(cf_key(tail), Value::Object(row));
    }
    json!({
        "algebra": r.algebra.as_str(),
        "k": r.k,
        "n_range": [r.ns.first(), r.ns.last()],
        "trajectory": traj,
        "stable_from": r.stable_from,
        "bound_4k": r.bound,
        "constant_from_bound": r.constant_from_bound,
    })
}

/// `1 + 12z + 36z^2`
pub fn poly_text(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if *c == BigInt::from(0) {
            continue;
        }
        let (neg, abs) = if *c < BigInt::from(0) {
            (true, -c)
        } else {
            (false, c.clone())
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let one = abs == BigInt::from(1);
        match k {
            0 => out.push_str(&abs.to_string()),
            _ => {
                if !one {
                    out.push_str(&abs.to_string());
                }
                out.push('z');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Multiplicity rows `(lambda, cf, mult)` for CSV output.
pub fn decomposition_rows(t: &DecompositionTable) -> Vec<(String, String, BigUint)> {
    t.entries
        .iter()
        .map(|(l, m)| (l.lambda_bar.to_string(), l.cf_string(), m.clone()))
        .collect()
}
