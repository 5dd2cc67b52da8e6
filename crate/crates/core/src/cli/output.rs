//! Output documents.
//!
//! Every command builds one `serde_json::Value`; JSON output serializes it
//! (keys sorted, field elements as canonical literal strings) and text output
//! is a line-oriented rendering of the same value.

use serde_json::{json, Map, Value};

use crate::exactnum::GaussianRational;
use crate::weight::{ClosedCoord, ClosedSet, Interval, WeightPoint};

pub fn gauss(x: &GaussianRational) -> Value {
    Value::String(x.to_string())
}

pub fn gauss_list<'a>(xs: impl IntoIterator<Item = &'a GaussianRational>) -> Value {
    Value::Array(xs.into_iter().map(gauss).collect())
}

pub fn point(p: &WeightPoint) -> Value {
    gauss_list(p.coords())
}

pub fn lower_end(lo: Option<i64>) -> Value {
    lo.map_or_else(|| json!("-inf"), |k| json!(k))
}

pub fn upper_end(hi: Option<i64>) -> Value {
    hi.map_or_else(|| json!("+inf"), |k| json!(k))
}

pub fn interval(iv: &Interval) -> Value {
    json!({ "lo": lower_end(iv.lo), "hi": upper_end(iv.hi) })
}

pub fn closure(c: &ClosedSet) -> Value {
    Value::Array(
        c.coords()
            .iter()
            .enumerate()
            .map(|(i, coord)| match coord {
                ClosedCoord::FullLine => json!({ "direction": i + 1, "full_line": true }),
                ClosedCoord::Finite(values) => json!({
                    "direction": i + 1,
                    "full_line": false,
                    "values": gauss_list(values),
                }),
            })
            .collect(),
    )
}

pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc)
        .expect("values built from strings and integers serialize");
    s.push('\n');
    s
}

pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    match doc {
        Value::Object(map) => write_object(&mut out, map, 0),
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn write_object(out: &mut String, map: &Map<String, Value>, indent: usize) {
    let pad = "  ".repeat(indent);
    for (key, value) in map {
        if is_flat(value) {
            out.push_str(&format!("{pad}{key}: {}\n", scalar(value)));
            continue;
        }
        out.push_str(&format!("{pad}{key}:\n"));
        match value {
            Value::Object(inner) => write_object(out, inner, indent + 1),
            Value::Array(items) => write_items(out, items, indent + 1),
            _ => unreachable!("scalars are flat"),
        }
    }
}

fn write_items(out: &mut String, items: &[Value], indent: usize) {
    let pad = "  ".repeat(indent);
    for item in items {
        match item {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}-\n"));
                write_object(out, inner, indent + 1);
            }
            Value::Array(inner) if !is_flat(item) => {
                out.push_str(&format!("{pad}-\n"));
                write_items(out, inner, indent + 1);
            }
            other => out.push_str(&format!("{pad}- {}\n", scalar(other))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals_use_signed_infinities() {
        assert_eq!(
            interval(&Interval::new(None, Some(2))),
            json!({"lo": "-inf", "hi": 2})
        );
        assert_eq!(
            interval(&Interval::new(Some(-1), None)),
            json!({"lo": -1, "hi": "+inf"})
        );
    }

    #[test]
    fn text_rendering_is_stable() {
        let doc = json!({
            "b": [1, 2],
            "a": {"x": "3/2", "y": [{"k": true}]},
        });
        assert_eq!(
            render_text(&doc),
            "a:\n  x: 3/2\n  y:\n    -\n      k: true\nb: [1, 2]\n"
        );
        assert!(
            render_json(&doc).find("\"a\"").unwrap() < render_json(&doc).find("\"b\"").unwrap()
        );
    }
}
