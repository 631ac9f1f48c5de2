use std::fs;
use std::io::Write;

use serde_json::{json, Map, Value};

use crate::args::{Format, Settings};

/// Version of the structured report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// One command's output, rendered as text or as a JSON document.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub status: String,
    pub result: Value,
    pub text: String,
    pub exit_code: i32,
    /// Run-dependent remarks printed on stderr, kept out of the report.
    pub notes: Vec<String>,
}

impl Report {
    /// The structured document; `generated_at` is the only field that
    /// varies between identical runs.
    pub fn document(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "generated_at": chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            "inputs": Value::Object(self.inputs.clone()),
            "status": self.status,
            "result": self.result,
        })
    }

    pub fn emit(&self, settings: &Settings, out: &mut dyn Write) -> Result<(), String> {
        let doc = serde_json::to_string_pretty(&self.document()).expect("serializable") + "\n";
        let rendered = match settings.format {
            Format::Text => &self.text,
            Format::Json => &doc,
        };
        out.write_all(rendered.as_bytes()).map_err(|e| e.to_string())?;
        if let Some(dir) = &settings.report_dir {
            fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
            let txt = dir.join(format!("{}.txt", self.command));
            let js = dir.join(format!("{}.json", self.command));
            fs::write(&txt, &self.text).map_err(|e| format!("cannot write {}: {e}", txt.display()))?;
            fs::write(&js, &doc).map_err(|e| format!("cannot write {}: {e}", js.display()))?;
        }
        Ok(())
    }
}
