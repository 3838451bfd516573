//! Matrix files: CSV (one row per line) or a JSON document
//! `{"n": 3, "entries": [[...], ...]}` with an optional `"m"` column count.
//! Entries are integers or `"p/q"` strings. A bare nested array is accepted
//! too, which is how reports print matrices.

use std::path::Path;

use serde_json::Value;

use crate::matrix::Matrix;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn infer(path: &Path, text: &str) -> Format {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("csv") => Format::Csv,
            Some("json") => Format::Json,
            _ if text.trim_start().starts_with(['{', '[']) => Format::Json,
            _ => Format::Csv,
        }
    }
}

pub fn read_matrix(path: &Path, format: Option<Format>) -> Result<Matrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let format = format.unwrap_or_else(|| Format::infer(path, &text));
    let parsed = match format {
        Format::Csv => parse_csv(&text),
        Format::Json => parse_json(&text),
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

/// Rows on separate lines, entries separated by commas. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_csv(text: &str) -> Result<Matrix, String> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|tok| scalar::parse(tok).map_err(|e| format!("line {}: {e}", lineno + 1)))
            .collect::<Result<Vec<Scalar>, String>>()?;
        rows.push(row);
    }
    finish(rows)
}

pub fn parse_json(text: &str) -> Result<Matrix, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    parse_value(&value)
}

/// A document object or a bare nested array.
pub fn parse_value(value: &Value) -> Result<Matrix, String> {
    match value {
        Value::Array(_) => finish(parse_rows(value)?),
        Value::Object(obj) => {
            let entries = obj.get("entries").ok_or("missing \"entries\"")?;
            let m = finish(parse_rows(entries)?)?;
            let dim = |key: &str| -> Result<Option<usize>, String> {
                obj.get(key)
                    .map(|v| v.as_u64().map(|u| u as usize).ok_or(format!("\"{key}\" must be a non-negative integer")))
                    .transpose()
            };
            let n = dim("n")?;
            let cols = dim("m")?.or(n);
            if n.is_some_and(|n| n != m.rows()) || cols.is_some_and(|c| c != m.cols()) {
                return Err(format!("declared size does not match the {}x{} entries", m.rows(), m.cols()));
            }
            Ok(m)
        }
        _ => Err("expected an object or an array of rows".into()),
    }
}

fn parse_rows(value: &Value) -> Result<Vec<Vec<Scalar>>, String> {
    let rows = value.as_array().ok_or("\"entries\" must be an array of rows")?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.as_array().ok_or(format!("row {} is not an array", i + 1))?;
            row.iter()
                .map(|v| match v {
                    Value::String(s) => scalar::parse(s).map_err(|e| e.to_string()),
                    Value::Number(n) if n.is_i64() => Ok(scalar::int(n.as_i64().unwrap_or_default())),
                    Value::Number(n) if n.is_u64() => scalar::parse(&n.to_string()).map_err(|e| e.to_string()),
                    other => Err(format!("entry {other} is not an integer or \"p/q\" string")),
                })
                .collect()
        })
        .collect()
}

fn finish(rows: Vec<Vec<Scalar>>) -> Result<Matrix, String> {
    if rows.is_empty() {
        return Err("matrix has no rows".into());
    }
    Matrix::from_rows(rows).map_err(|e| e.to_string())
}
