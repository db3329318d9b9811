//! The result envelope every subcommand fills in: serializable as stable
//! JSON (fixed top-level keys) and as human-readable text. Computed values
//! that can exceed native integer width are rendered as exact decimal
//! strings.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub subcommand: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub timings: Map<String, Value>,
    pub status: Status,
}

impl CommandResult {
    pub fn new(subcommand: &'static str) -> Self {
        CommandResult {
            subcommand,
            inputs: Map::new(),
            results: Map::new(),
            timings: Map::new(),
            status: Status::Ok,
        }
    }

    pub fn input(&mut self, key: &str, value: Value) -> &mut Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.insert(key.to_string(), value);
        self
    }

    pub fn timing_ms(&mut self, key: &str, millis: f64) -> &mut Self {
        self.timings.insert(key.to_string(), json!(millis));
        self
    }

    /// Record a failure; the message lands under `results.error`.
    pub fn fail(&mut self, message: impl Into<String>) -> &mut Self {
        self.status = Status::Error;
        self.results.insert("error".into(), json!(message.into()));
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Error => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "results": self.results,
            "timings": self.timings,
            "status": match self.status { Status::Ok => "ok", Status::Error => "error" },
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("subcommand: {}\n", self.subcommand));
        if !self.inputs.is_empty() {
            out.push_str("inputs:\n");
            for (k, v) in &self.inputs {
                out.push_str(&format!("  {}: {}\n", k, render_value(v)));
            }
        }
        out.push_str("results:\n");
        for (k, v) in &self.results {
            out.push_str(&format!("  {}: {}\n", k, render_value(v)));
        }
        for (k, v) in &self.timings {
            out.push_str(&format!("timing {}: {} ms\n", k, render_value(v)));
        }
        out.push_str(&format!(
            "status: {}\n",
            match self.status {
                Status::Ok => "ok",
                Status::Error => "error",
            }
        ));
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().any(Value::is_object) => items
            .iter()
            .map(|item| match item {
                Value::Object(fields) => {
                    let line = fields
                        .iter()
                        .filter(|(_, v)| !v.is_null())
                        .map(|(k, v)| format!("{}={}", k, render_value(v)))
                        .collect::<Vec<_>>()
                        .join(" ");
                    format!("\n    {}", line)
                }
                other => format!("\n    {}", render_value(other)),
            })
            .collect::<Vec<_>>()
            .join(""),
        Value::Array(items) => items
            .iter()
            .map(render_value)
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}
