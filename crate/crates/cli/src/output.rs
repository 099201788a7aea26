// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! Report rendering. Both output modes print from the same rounded JSON
//! value, so human and JSON output agree digit for digit.

use std::fmt::Write;

use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: &str = "v1";

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = sig12(n.as_f64().unwrap_or(f64::NAN));
            if let Some(rounded) = Number::from_f64(x) {
                *n = rounded;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Rounds every float and appends the schema version as the last field.
pub fn finalize(command: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("command".into(), Value::String(command.into()));
    match body {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("result".into(), other);
        }
    }
    out.insert(
        "schema_version".into(),
        Value::String(SCHEMA_VERSION.into()),
    );
    let mut v = Value::Object(out);
    round_floats(&mut v);
    v
}

pub fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn render_human(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Object(_))
        && !matches!(v, Value::Array(items) if items.iter().any(|i| i.is_object()))
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                if is_flat(val) {
                    let _ = writeln!(out, "{pad}{key}: {}", scalar(val));
                } else {
                    let _ = writeln!(out, "{pad}{key}:");
                    render_into(out, val, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) if map.values().all(is_flat) => {
                        let line: Vec<String> = map
                            .iter()
                            .map(|(k, x)| format!("{k}={}", scalar(x)))
                            .collect();
                        let _ = writeln!(out, "{pad}- {}", line.join("  "));
                    }
                    other => {
                        let _ = writeln!(out, "{pad}-");
                        render_into(out, other, depth + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}
