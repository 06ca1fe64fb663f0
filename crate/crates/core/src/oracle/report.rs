//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::Serialize;

/// Result of one verification check. Serialized as JSON by the CLI; field
/// order and the BTreeMap parameter order are deterministic.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub pass: bool,
    pub worst_residual: f64,
    pub n_samples: u64,
    pub params: BTreeMap<String, ParamValue>,
}

impl VerificationReport {
    pub fn new(check: &str, pass: bool, worst_residual: f64, n_samples: u64) -> Self {
        debug_assert!(worst_residual >= 0.0);
        VerificationReport {
            check: check.to_string(),
            pass,
            worst_residual,
            n_samples,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<ParamValue>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

/// Parameter values recorded alongside a check.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Number(f64),
    Text(String),
    List(Vec<f64>),
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Number(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Number(v as f64)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Number(v as f64)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

impl From<Vec<f64>> for ParamValue {
    fn from(v: Vec<f64>) -> Self {
        ParamValue::List(v)
    }
}
