//! Plain-text rendering of the JSON reports. Every number in the JSON shows
//! up verbatim; Betti tables get the usual grid.

use std::fmt::Write;

use serde_json::Value;
use spacecurves::module::BettiTable;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    block(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => m.values().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter()
                .map(|(k, x)| format!("{k}: {}", scalar(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => scalar(other),
    }
}

fn block(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k == "betti" {
                    if let Ok(table) = serde_json::from_value::<BettiTable>(serde_json::json!({ "ranks": x })) {
                        writeln!(out, "{pad}{k}:").unwrap();
                        for line in table.to_string().lines() {
                            writeln!(out, "{pad}  {line}").unwrap();
                        }
                        continue;
                    }
                }
                if is_flat(x) {
                    writeln!(out, "{pad}{k}: {}", inline(x)).unwrap();
                } else {
                    writeln!(out, "{pad}{k}:").unwrap();
                    block(out, x, indent + 2);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_flat(x) {
                    writeln!(out, "{pad}- {}", inline(x)).unwrap();
                } else {
                    writeln!(out, "{pad}-").unwrap();
                    block(out, x, indent + 2);
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other)).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested() {
        let v = json!({"degree": 2, "rao_dims": {"0": 1}, "entries": [{"h": -1, "verdict": {"kind": "x"}}]});
        let text = render(&v);
        assert!(text.contains("degree: 2\n"));
        assert!(text.contains("rao_dims: {0: 1}\n"));
        assert!(text.contains("    verdict: {kind: x}\n"));
    }

    #[test]
    fn betti_grid() {
        let v = json!({"betti": [{"0": 1}, {"2": 4}, {"3": 4}, {"4": 1}]});
        let text = render(&v);
        assert!(text.contains("total:   1   4   4   1"), "{text}");
    }
}
