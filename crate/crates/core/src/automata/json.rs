//! The DFA interchange format:
//!
//! ```json
//! { "states": 3, "alphabet": ["a", "b"],
//!   "transitions": { "a": [1, 2, 2], "b": [0, 0, 2] },
//!   "initial": 0, "finals": [2] }
//! ```
//!
//! Every letter of `alphabet` must have exactly one row in `transitions`, and
//! every row must list one successor per state. Incomplete automata are
//! rejected rather than completed with a sink.

use serde_json::{json, Map, Value};

use super::Dfa;
use crate::error::{Error, Result};
use crate::transform::Transformation;

fn parse_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        message: message.into(),
    }
}

fn as_count(value: &Value, path: &str) -> Result<usize> {
    value
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| parse_err(path, format!("expected a non-negative integer, found {value}")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(key, "missing field"))
}

pub fn dfa_from_json_value(value: &Value) -> Result<Dfa> {
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err("$", "expected an object"))?;
    for key in obj.keys() {
        if !["states", "alphabet", "transitions", "initial", "finals"].contains(&key.as_str()) {
            return Err(parse_err(key.as_str(), "unknown field"));
        }
    }
    let n = as_count(field(obj, "states")?, "states")?;
    if n == 0 {
        return Err(parse_err("states", "an automaton needs at least one state"));
    }

    let alphabet: Vec<String> = field(obj, "alphabet")?
        .as_array()
        .ok_or_else(|| parse_err("alphabet", "expected an array of strings"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(String::from)
                .ok_or_else(|| parse_err(format!("alphabet[{i}]"), "expected a string"))
        })
        .collect::<Result<_>>()?;
    if alphabet.is_empty() {
        return Err(parse_err("alphabet", "alphabet is empty"));
    }
    for (i, a) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(a) {
            return Err(parse_err(format!("alphabet[{i}]"), format!("duplicate letter {a:?}")));
        }
    }

    let rows = field(obj, "transitions")?
        .as_object()
        .ok_or_else(|| parse_err("transitions", "expected an object keyed by letter"))?;
    for key in rows.keys() {
        if !alphabet.contains(key) {
            return Err(parse_err(
                format!("transitions.{key}"),
                "letter not listed in alphabet",
            ));
        }
    }
    let mut delta = Vec::with_capacity(alphabet.len());
    for a in &alphabet {
        let path = format!("transitions.{a}");
        let row = rows
            .get(a)
            .ok_or_else(|| parse_err(&path, "missing transition row"))?
            .as_array()
            .ok_or_else(|| parse_err(&path, "expected an array of states"))?;
        if row.len() != n {
            return Err(parse_err(
                &path,
                format!("expected {n} successors, found {}", row.len()),
            ));
        }
        let images = row
            .iter()
            .enumerate()
            .map(|(q, v)| {
                let p = format!("{path}[{q}]");
                let s = as_count(v, &p)?;
                if s >= n {
                    return Err(parse_err(p, format!("state {s} out of range")));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        delta.push(Transformation::new(images)?);
    }

    let initial = as_count(field(obj, "initial")?, "initial")?;
    if initial >= n {
        return Err(parse_err("initial", format!("state {initial} out of range")));
    }
    let finals = field(obj, "finals")?
        .as_array()
        .ok_or_else(|| parse_err("finals", "expected an array of states"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let p = format!("finals[{i}]");
            let s = as_count(v, &p)?;
            if s >= n {
                return Err(parse_err(p, format!("state {s} out of range")));
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;

    Dfa::new(n, alphabet, delta, initial, finals)
}

pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    let value: Value = serde_json::from_str(text).map_err(|e| parse_err("$", e.to_string()))?;
    dfa_from_json_value(&value)
}

pub fn dfa_to_json_value(d: &Dfa) -> Value {
    let mut transitions = Map::new();
    for (a, t) in d.alphabet().iter().zip(d.delta()) {
        transitions.insert(a.clone(), json!(t.images()));
    }
    json!({
        "states": d.n(),
        "alphabet": d.alphabet(),
        "transitions": transitions,
        "initial": d.initial(),
        "finals": d.finals(),
    })
}

pub fn dfa_to_json(d: &Dfa) -> String {
    serde_json::to_string_pretty(&dfa_to_json_value(d)).expect("DFA serializes")
}
