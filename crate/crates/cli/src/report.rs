use std::fmt::Write;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Everything one invocation produced.
#[derive(Debug, Clone, Serialize, Default)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 over the input files in argument order.
    pub input_digest: String,
    pub verdicts: Vec<Verdict>,
    pub artifacts: Vec<String>,
    /// Largest numerator or denominator bit size among exact scalars in the input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_coefficient_bits: Option<u64>,
    /// Human-readable body.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), ..Default::default() }
    }

    pub fn digest(&mut self, inputs: &[&[u8]]) {
        let mut h = Sha256::new();
        for i in inputs {
            h.update((i.len() as u64).to_le_bytes());
            h.update(i);
        }
        self.input_digest = hex::encode(h.finalize());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn verdict(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict { name: name.into(), pass, detail: detail.into() });
    }

    pub fn artifact(&mut self, path: impl Into<String>) {
        self.artifacts.push(path.into());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        for v in &self.verdicts {
            let tag = if v.pass { "pass" } else { "FAIL" };
            if v.detail.is_empty() {
                let _ = writeln!(s, "[{tag}] {}", v.name);
            } else {
                let _ = writeln!(s, "[{tag}] {}: {}", v.name, v.detail);
            }
        }
        for a in &self.artifacts {
            let _ = writeln!(s, "wrote {a}");
        }
        s
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
