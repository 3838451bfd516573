//! Machine-readable command reports.
//!
//! Scalars render as `"p/q"` strings, polynomials as coefficient arrays in
//! ascending powers, matrices as nested arrays of rows. Result keys are kept
//! sorted, so identical inputs produce identical bytes.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::scalar::{self, Scalar};

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(scalar::render(s))
}

pub fn poly_json(p: &Polynomial) -> Value {
    json!(p.to_strings())
}

pub fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_strings())
}

/// `sha256:` digest of the canonical row rendering of a matrix.
pub fn digest(m: &Matrix) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}x{}\n", m.rows(), m.cols()));
    for row in m.to_strings() {
        h.update(row.join(","));
        h.update("\n");
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signs: Option<String>,
    pub pass: bool,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub failed: usize,
    pub failed_names: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub options: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            options: BTreeMap::new(),
            input_digest: None,
            results: BTreeMap::new(),
            checks: Vec::new(),
            summary: Summary { checks: 0, failed: 0, failed_names: Vec::new() },
        }
    }

    pub fn option(&mut self, key: &str, value: impl ToString) {
        self.options.insert(key.to_string(), value.to_string());
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    /// Records an equality check; `pass` is whether `lhs == rhs`.
    pub fn check<T: PartialEq>(
        &mut self,
        name: &str,
        signs: Option<String>,
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> Value,
    ) -> bool {
        self.check_raw(name, signs, lhs == rhs, render(lhs), render(rhs))
    }

    pub fn check_raw(&mut self, name: &str, signs: Option<String>, pass: bool, lhs: Value, rhs: Value) -> bool {
        self.checks.push(Check { name: name.to_string(), signs, pass, lhs, rhs });
        pass
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Fills in the summary and renders pretty JSON with a trailing newline.
    pub fn finish(mut self) -> (bool, String) {
        let mut failed_names: Vec<String> = Vec::new();
        for c in self.checks.iter().filter(|c| !c.pass) {
            if !failed_names.contains(&c.name) {
                failed_names.push(c.name.clone());
            }
        }
        self.summary =
            Summary { checks: self.checks.len(), failed: self.checks.iter().filter(|c| !c.pass).count(), failed_names };
        let ok = self.all_passed();
        let mut text = serde_json::to_string_pretty(&self).expect("report serializes");
        text.push('\n');
        (ok, text)
    }
}
