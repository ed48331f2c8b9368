//! Canonical JSON: `{"terms":[{"c":"-2","m":{"u6":1,"u1":2}}]}`.

use serde_json::{json, Map, Value};

use super::element::{FreeElement, Generator, Monomial};
use crate::error::{Error, Result};

impl FreeElement {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let mono: Map<String, Value> = m.pairs().iter().map(|(g, e)| (g.key(), json!(e))).collect();
                json!({"c": FreeElement::coeff_string(c), "m": mono})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<FreeElement> {
        let bad = |what: &str| Error::Parse(format!("free element JSON: {what}"));
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut out = FreeElement::zero();
        for t in terms {
            let c = t.get("c").and_then(Value::as_str).ok_or_else(|| bad("missing c"))?;
            let m = t.get("m").and_then(Value::as_object).ok_or_else(|| bad("missing m"))?;
            let mut pairs = Vec::new();
            for (g, e) in m {
                let e = e.as_u64().ok_or_else(|| bad("exponent"))?;
                pairs.push((Generator::parse(g)?, e as u32));
            }
            out.add_term(Monomial::from_pairs(pairs), FreeElement::parse_coeff(c)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freering::{rat, Family};

    #[test]
    fn layout_and_round_trip() {
        let x = FreeElement::monomial(Monomial::from_indices(Family::U, [1, 6, 1]), rat(-2));
        let s = x.to_json().to_string();
        assert_eq!(s, r#"{"terms":[{"c":"-2","m":{"u6":1,"u1":2}}]}"#);
        let back = FreeElement::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, x);
        assert_eq!(back.to_json().to_string(), s);
    }
}
