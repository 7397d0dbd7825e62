//! Command reports. JSON keys keep insertion order, and every integer is a
//! decimal string.

use serde_json::{Map, Value};

pub const VERSION: &str = concat!("divlab ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub inputs: Map<String, Value>,
    pub result: Map<String, Value>,
    pub counts: Map<String, Value>,
}

/// Decimal-string JSON value for anything printable.
pub fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn list<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(s).collect())
}

impl Report {
    pub fn new(command: String, ring: String) -> Self {
        Report {
            command,
            ring,
            inputs: Map::new(),
            result: Map::new(),
            counts: Map::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: Value) -> &mut Self {
        self.inputs.insert(key.into(), v);
        self
    }

    pub fn result(&mut self, key: &str, v: Value) -> &mut Self {
        self.result.insert(key.into(), v);
        self
    }

    pub fn count(&mut self, key: &str, n: usize) -> &mut Self {
        self.counts.insert(key.into(), s(n));
        self
    }

    /// Keys in the order command, ring, inputs, result, counts, version.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), s(&self.command));
        m.insert("ring".into(), s(&self.ring));
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert("result".into(), Value::Object(self.result.clone()));
        m.insert("counts".into(), Value::Object(self.counts.clone()));
        m.insert("version".into(), s(VERSION));
        Value::Object(m)
    }

    /// One `path: value` line per leaf.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        flatten("", &self.to_json(), &mut out);
        out
    }
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, v) in m {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        _ => {
            out.push_str(path);
            out.push_str(": ");
            out.push_str(&scalar_text(v));
            out.push('\n');
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(scalar_text).collect::<Vec<_>>().join(", "),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}
