//! Plain-text rendering of JSON reports.

use serde_json::Value;

pub fn text(report: &Value) -> String {
    let mut out = String::new();
    write(&mut out, report, 0);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|x| match x {
                    Value::Array(_) | Value::Object(_) => inline_row(x),
                    _ => inline(x),
                })
                .collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(m) if m.is_empty() => Some("{}".into()),
        Value::Object(_) => None,
    }
}

/// Arrays of scalars nested one level deep, e.g. matrix rows.
fn inline_row(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => inline(v),
        _ => None,
    }
}

fn write(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write(out, x, depth + 1);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", inline(v).unwrap_or_default())),
    }
}
