use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    /// Inapplicable claims pass vacuously.
    pub applicable: bool,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TaskOutput {
    pub task: String,
    #[serde(skip)]
    pub lines: Vec<String>,
    pub data: Value,
    pub verdicts: Vec<Verdict>,
}

impl TaskOutput {
    pub fn new(task: &str) -> Self {
        TaskOutput {
            task: task.to_string(),
            lines: Vec::new(),
            data: Value::Null,
            verdicts: Vec::new(),
        }
    }
}

/// Top-level report shared by every subcommand.
pub struct Report {
    pub command: &'static str,
    pub object: Value,
    pub guards: Value,
    pub body: Map<String, Value>,
    pub passed: bool,
    pub timing_ms: Vec<(String, f64)>,
}

impl Report {
    pub fn new(command: &'static str, object: Value, guards: Value) -> Self {
        Report {
            command,
            object,
            guards,
            body: Map::new(),
            passed: true,
            timing_ms: Vec::new(),
        }
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "schema_version": SCHEMA_VERSION,
            "tool": { "name": "zdg", "version": env!("CARGO_PKG_VERSION") },
            "command": self.command,
            "object": self.object,
            "guards": self.guards,
        });
        let m = v.as_object_mut().expect("object");
        m.extend(self.body.clone());
        m.insert("passed".into(), Value::Bool(self.passed));
        if timing {
            let t: Map<String, Value> = self
                .timing_ms
                .iter()
                .map(|(k, ms)| (k.clone(), json!((ms * 1000.0).round() / 1000.0)))
                .collect();
            m.insert("timing_ms".into(), Value::Object(t));
        }
        v
    }
}

pub fn verdict_line(v: &Verdict) -> String {
    let tag = match (v.applicable, v.passed) {
        (false, _) => "n/a ",
        (true, true) => "PASS",
        (true, false) => "FAIL",
    };
    if v.detail.is_empty() {
        format!("{tag} {}", v.name)
    } else {
        format!("{tag} {} ({})", v.name, v.detail)
    }
}
