//! Reports print either as text (a summary line, then `key: value` lines) or
//! as a single JSON object carrying the same keys. Numbers are written in
//! shortest round-trip form in both modes, so either output parses back to
//! identical values.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug)]
pub struct Report {
    command: &'static str,
    summary: String,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str, summary: impl Into<String>) -> Self {
        Self {
            command,
            summary: summary.into(),
            fields: Map::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = self.summary.clone();
                for (k, v) in &self.fields {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("\n{k}: {v}"));
                }
                out
            }
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("command".into(), self.command.into());
                obj.insert("summary".into(), self.summary.clone().into());
                obj.extend(self.fields.clone());
                Value::Object(obj).to_string()
            }
        }
    }
}
