use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// One line of JSON describing a finished command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub result: Value,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<bool>,
}

impl Report {
    pub fn new(command: &str, result: Value) -> Self {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            result,
            elapsed_ms: 0,
            seed: None,
            counterexample: None,
            finding: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
