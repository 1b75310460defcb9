//! Report envelopes and the CSV flattening of JSON results.

use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// `{meta, result}`. Nothing in `meta` depends on the machine or the clock,
/// so equal inputs give byte-identical output.
pub fn envelope(verb: &str, result: Value) -> Value {
    json!({
        "meta": {
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "verb": verb,
        },
        "result": result,
    })
}

fn flatten_into(prefix: &str, value: &Value, row: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten_into(&key(k), v, row);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let cells: Vec<String> = items.iter().map(scalar).collect();
            row.push((prefix.to_string(), cells.join(" ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten_into(&key(&i.to_string()), v, row);
            }
        }
        _ => row.push((prefix.to_string(), scalar(value))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One row per element when `result` is an array of objects, else one row.
/// Columns are the union of the flattened keys in first-seen order.
pub fn to_csv(result: &Value) -> Result<String> {
    let records: Vec<&Value> = match result {
        Value::Array(items) if items.iter().all(Value::is_object) => items.iter().collect(),
        other => vec![other],
    };
    let rows: Vec<Vec<(String, String)>> = records
        .into_iter()
        .map(|r| {
            let mut row = Vec::new();
            flatten_into("", r, &mut row);
            row
        })
        .collect();
    let mut header: Vec<String> = Vec::new();
    for (k, _) in rows.iter().flatten() {
        if !header.contains(k) {
            header.push(k.clone());
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(&header).map_err(io)?;
    for row in &rows {
        let cells = header.iter().map(|h| {
            row.iter()
                .find(|(k, _)| k == h)
                .map_or("", |(_, v)| v.as_str())
        });
        w.write_record(cells).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8 cells"))
}

pub fn render(verb: &str, result: Value, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            serde_json::to_string_pretty(&envelope(verb, result)).expect("serializable") + "\n"
        }
        Format::Csv => to_csv(&result)?,
    })
}

pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// The variant name, for structured error reports.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::BadLength { .. } => "BadLength",
        Error::BadChar { .. } => "BadChar",
        Error::BadCycleLength(_) => "BadCycleLength",
        Error::NoStars => "NoStars",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::DimensionTooLarge { .. } => "DimensionTooLarge",
        Error::EnumerationTooLarge(_) => "EnumerationTooLarge",
        Error::BadRange(_) => "BadRange",
        Error::Parse { .. } => "ParseError",
        Error::DuplicateEdge { .. } => "DuplicateEdge",
        Error::MissingZEntry { .. } => "MissingZEntry",
        Error::NonIntegralResult(_) => "NonIntegralResult",
        Error::MixedDimensions { .. } => "MixedDimensions",
        Error::CycleDoesNotFit { .. } => "CycleDoesNotFit",
        Error::BadTheoremId(_) => "BadTheoremId",
        Error::MissingParam(_) => "MissingParam",
        Error::BadPattern(_) => "BadPattern",
        Error::BudgetExceeded { .. } => "BudgetExceeded",
        Error::Io(_) => "Io",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut body = Map::new();
    body.insert("kind".into(), error_kind(e).into());
    body.insert("message".into(), e.to_string().into());
    if let Error::BudgetExceeded { lower, upper, nodes } = e {
        body.insert("lower".into(), lower.to_string().into());
        body.insert("upper".into(), upper.to_string().into());
        body.insert("nodes".into(), nodes.to_string().into());
    }
    json!({ "error": body })
}
