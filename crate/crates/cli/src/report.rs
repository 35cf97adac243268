use std::path::Path;
use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Certificate = 1,
    Input = 2,
    Budget = 3,
}

/// Budget exhaustion anywhere in the chain maps to 3; every other error is
/// an input problem.
pub fn classify(e: &anyhow::Error) -> Exit {
    let budget = e
        .chain()
        .any(|c| c.downcast_ref::<tinkit::Error>().is_some_and(tinkit::Error::is_budget));
    if budget {
        Exit::Budget
    } else {
        Exit::Input
    }
}

/// What a run read, produced and guaranteed.
pub struct RunReport {
    command: Vec<String>,
    inputs: Vec<Value>,
    outputs: Vec<String>,
    bounds: Vec<Value>,
    result: Value,
    error: Option<String>,
    started: Instant,
    deterministic: bool,
}

impl RunReport {
    pub fn new(command: Vec<String>, deterministic: bool) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            outputs: Vec::new(),
            bounds: Vec::new(),
            result: Value::Null,
            error: None,
            started: Instant::now(),
            deterministic,
        }
    }

    pub fn deterministic(&self) -> bool {
        self.deterministic
    }

    /// Reads a file, recording its path and SHA-256.
    pub fn read_input(&mut self, path: &Path) -> anyhow::Result<String> {
        let text = std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
        let digest = Sha256::digest(text.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs
            .push(json!({"path": path.display().to_string(), "sha256": hex}));
        Ok(text)
    }

    pub fn write_output(&mut self, path: &Path, text: &str) -> anyhow::Result<()> {
        std::fs::write(path, text).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?;
        self.outputs.push(path.display().to_string());
        Ok(())
    }

    /// Records `achieved <= bound`; the caller passes freshly recomputed values.
    pub fn bound(&mut self, quantity: &str, achieved: usize, bound: usize) -> bool {
        let holds = achieved <= bound;
        self.bounds
            .push(json!({"quantity": quantity, "achieved": achieved, "bound": bound, "holds": holds}));
        holds
    }

    pub fn set_result(&mut self, result: Value) {
        self.result = result;
    }

    pub fn fail(&mut self, e: &anyhow::Error) {
        self.error = Some(format!("{e:#}"));
    }

    pub fn print(&self, exit: Exit) {
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("inputs".into(), json!(self.inputs));
        out.insert("outputs".into(), json!(self.outputs));
        out.insert("bounds".into(), json!(self.bounds));
        out.insert("result".into(), self.result.clone());
        if let Some(e) = &self.error {
            out.insert("error".into(), json!(e));
        }
        out.insert("exit_code".into(), json!(exit as u8));
        if !self.deterministic {
            out.insert("wall_time_s".into(), json!(self.started.elapsed().as_secs_f64()));
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&Value::Object(out)).expect("reports serialize")
        );
    }
}
