use serde_json::{json, Map, Value};

use schubertine::combinat::Group;
use schubertine::Error;

/// Recursively sorts object keys so that output is canonical.
pub fn canonical(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            let sorted: Map<String, Value> = keys.into_iter().map(|k| (k.clone(), canonical(&m[k]))).collect();
            Value::Object(sorted)
        }
        Value::Array(a) => Value::Array(a.iter().map(canonical).collect()),
        other => other.clone(),
    }
}

pub fn group_name(g: Group) -> &'static str {
    match g {
        Group::A => "a",
        Group::C => "c",
        Group::D => "d",
    }
}

pub fn error_json(e: &Error) -> Value {
    let (kind, precondition) = match e {
        Error::Parse(_) => ("parse", None),
        Error::Precondition { name, .. } => ("precondition", Some(*name)),
        Error::NonIntegral(_) => ("non-integral", None),
        Error::RewriteLimit(_) => ("rewrite-limit", None),
        Error::InexactDivision(_) => ("inexact-division", None),
        Error::Elimination(_) => ("elimination", None),
    };
    json!({"error": {"kind": kind, "precondition": precondition, "message": e.to_string()}})
}

/// LaTeX for the JSON form of a basis expansion.
pub fn expansion_latex(v: &Value) -> String {
    let sym = match v["basis"].as_str() {
        Some("schur") => "s",
        Some("theta") => "\\Theta",
        Some("eta") => "H",
        _ => "m",
    };
    let mut out = String::new();
    for term in v["coeffs"].as_array().into_iter().flatten() {
        let c = term["c"].as_str().unwrap_or("0");
        let label = term["label"].as_str().unwrap_or("");
        let (sign, mag) = match c.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("+", c),
        };
        if !out.is_empty() || sign == "-" {
            out.push_str(if out.is_empty() { "-" } else if sign == "-" { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(mag);
            out.push_str("\\,");
        }
        out.push_str(&format!("{sym}_{{{label}}}"));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sorts_nested_keys() {
        let v = json!({"b": 1, "a": {"d": [ {"z": 0, "y": 1} ], "c": 2}});
        assert_eq!(canonical(&v).to_string(), r#"{"a":{"c":2,"d":[{"y":1,"z":0}]},"b":1}"#);
    }

    #[test]
    fn latex_of_expansion() {
        let v = json!({"basis": "theta", "coeffs": [{"label": "4", "c": "2"}, {"label": "3,1", "c": "-1"}]});
        assert_eq!(expansion_latex(&v), "2\\,\\Theta_{4} - \\Theta_{3,1}");
    }
}
