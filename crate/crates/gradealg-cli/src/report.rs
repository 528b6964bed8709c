//! Machine-readable command reports.
//!
//! One structured document per run. Field names are frozen: `schema_version`,
//! `command`, `verdicts`, `witnesses`. Verdict and witness maps are sorted,
//! so the serialized form is byte-identical across runs on identical inputs;
//! timings are deliberately kept out of the document and printed on the
//! human-readable channel instead.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    /// Echo of the subcommand and its arguments.
    pub command: String,
    pub verdicts: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            verdicts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) {
        self.verdicts.insert(key.to_string(), value.into());
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Value>) {
        self.witnesses.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}
