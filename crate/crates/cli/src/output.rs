use std::fmt::Display;

use serde_json::{json, Map, Value};

/// Sets above this size are summarized in text mode.
pub const TEXT_ELISION_LIMIT: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// What a command produced, before it is rendered.
pub struct Outcome {
    pub input: Value,
    pub result: Value,
    pub text: Vec<String>,
    /// Process exit status; non-zero only for `verify` mismatches.
    pub status: u8,
}

impl Outcome {
    pub fn ok(input: Value, result: Value, text: Vec<String>) -> Self {
        Outcome { input, result, text, status: 0 }
    }
}

/// `serde_json::Map` is ordered by key, so output is deterministic.
pub fn envelope(command: &str, outcome: &Outcome, timing_ms: u128) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("input".into(), outcome.input.clone());
    m.insert("result".into(), outcome.result.clone());
    m.insert("timing_ms".into(), json!(timing_ms as u64));
    Value::Object(m)
}

pub fn num<T: Display>(v: T) -> Value {
    Value::String(v.to_string())
}

pub fn nums<T: Display>(vs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(vs.into_iter().map(num).collect())
}

pub fn list<T: Display>(vs: &[T]) -> String {
    let parts: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Lists small sets in full; large ones as a count and their extremes.
pub fn elided<T: Display>(vs: &[T]) -> String {
    match vs {
        [] => "{}".into(),
        [first, .., last] if vs.len() > TEXT_ELISION_LIMIT => {
            format!("{} elements, from {first} to {last}", vs.len())
        }
        _ => list(vs),
    }
}

pub fn line(key: &str, value: impl Display) -> String {
    format!("{key:<20} {value}")
}
