//! JSON reports emitted by the command-line tool.
//!
//! Exact counts are always decimal strings so consumers never truncate them
//! to a machine integer. Floats appear only for timings, residuals and
//! tolerances, rounded to 15 significant digits.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::identities::{sig15, VerificationResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodValue {
    pub method: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub n: usize,
    pub value: String,
    /// Raw series coefficient when `value` is a rescaled term.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub method: String,
    pub value: Option<String>,
    pub params: BTreeMap<String, Value>,
    pub elapsed_ms: f64,
    pub status: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub methods: Vec<MethodValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationResult>,
}

impl Report {
    pub fn new(input: impl Into<String>, method: impl Into<String>, status: impl Into<String>) -> Report {
        Report {
            input: input.into(),
            method: method.into(),
            value: None,
            params: BTreeMap::new(),
            elapsed_ms: 0.0,
            status: status.into(),
            methods: Vec::new(),
            rows: Vec::new(),
            verification: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Report {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Float parameter rounded to 15 significant digits.
    pub fn float_param(self, key: &str, value: f64) -> Report {
        self.param(key, sig15(value))
    }

    pub fn with_elapsed(mut self, ms: f64) -> Report {
        self.elapsed_ms = sig15(ms);
        self
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn parse(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}

/// Compact JSON for any report fragment.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    serde_json::to_string(value)
}
