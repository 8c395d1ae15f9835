//! Check reports: one record per verified statement, in text and JSON.
//!
//! Every verifier in the crate produces `Report` values with the same shape,
//! which is also the JSON schema of the CLI's `--json` output:
//!
//! ```json
//! { "statement": "...", "parameters": {...}, "lhs": "...", "rhs": "...",
//!   "abs_error": 1e-12, "error_bound": 1e-15, "tolerance": 1e-10, "pass": true }
//! ```
//!
//! Exact symbolic checks carry `tolerance: 0.0` and no numeric fields;
//! numeric checks carry the compared values and the rigorous error bound of
//! the computation.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub statement: String,
    pub parameters: BTreeMap<String, Value>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub abs_error: Option<f64>,
    pub error_bound: Option<f64>,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Report {
    /// Report for an exact (zero-tolerance) sweep over `cases` instances.
    pub fn exact(statement: &str, cases: usize, failures: Vec<String>) -> Self {
        let mut parameters = BTreeMap::new();
        parameters.insert("cases".to_string(), Value::from(cases));
        if let Some(first) = failures.first() {
            parameters.insert("first_failure".to_string(), Value::from(first.clone()));
            parameters.insert("failures".to_string(), Value::from(failures.len()));
        }
        Report {
            statement: statement.to_string(),
            parameters,
            lhs: None,
            rhs: None,
            abs_error: None,
            error_bound: None,
            tolerance: Some(0.0),
            pass: failures.is_empty(),
        }
    }

    /// Report comparing two computed values at an absolute tolerance.
    pub fn numeric(
        statement: &str,
        lhs: String,
        rhs: String,
        abs_error: f64,
        error_bound: f64,
        tolerance: f64,
    ) -> Self {
        Report {
            statement: statement.to_string(),
            parameters: BTreeMap::new(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            abs_error: Some(abs_error),
            error_bound: Some(error_bound),
            tolerance: Some(tolerance),
            pass: abs_error <= tolerance,
        }
    }

    /// Report that only carries a computed value (no comparison).
    pub fn value(statement: &str, value: String, error_bound: Option<f64>) -> Self {
        Report {
            statement: statement.to_string(),
            parameters: BTreeMap::new(),
            lhs: Some(value),
            rhs: None,
            abs_error: None,
            error_bound,
            tolerance: None,
            pass: true,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// One-line text rendering: `PASS statement (k=v, ...) details`.
    pub fn line(&self) -> String {
        let mut out = String::new();
        out.push_str(if self.pass { "PASS " } else { "FAIL " });
        out.push_str(&self.statement);
        if !self.parameters.is_empty() {
            let params: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{}={}", k, render_value(v)))
                .collect();
            out.push_str(&format!(" ({})", params.join(", ")));
        }
        if let (Some(lhs), Some(rhs)) = (&self.lhs, &self.rhs) {
            out.push_str(&format!("  lhs={} rhs={}", lhs, rhs));
        } else if let Some(lhs) = &self.lhs {
            out.push_str(&format!("  value={}", lhs));
        }
        if let Some(err) = self.abs_error {
            out.push_str(&format!("  |diff|={:.3e}", err));
        }
        if let Some(bound) = self.error_bound {
            out.push_str(&format!("  bound={:.3e}", bound));
        }
        if let Some(tol) = self.tolerance {
            if tol > 0.0 {
                out.push_str(&format!("  tol={:.1e}", tol));
            }
        }
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Render a report list as JSON (an array, even for a single report).
pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
