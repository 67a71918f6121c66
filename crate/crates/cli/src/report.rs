//! Run reports: one JSON line per invocation, appended to the report file.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Hashed {
    /// File path, or `"stdout"`.
    pub name: String,
    pub sha256: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<Hashed>,
    pub outputs: Vec<Hashed>,
    pub exit_code: u8,
    pub elapsed_ms: u128,
    pub version: &'static str,
}

impl RunReport {
    pub fn append_to(&self, path: &Path) -> std::io::Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        let line = serde_json::to_string(self).expect("plain data serializes");
        writeln!(f, "{line}")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Collects hashes while a command runs.
pub struct Run {
    command: Vec<String>,
    inputs: Vec<Hashed>,
    outputs: Vec<Hashed>,
    started: Instant,
}

impl Run {
    pub fn start(command: Vec<String>) -> Self {
        Run {
            command,
            inputs: Vec::new(),
            outputs: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, name: &str, bytes: &[u8]) {
        self.inputs.push(Hashed {
            name: name.to_string(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn output(&mut self, name: &str, bytes: &[u8]) {
        self.outputs.push(Hashed {
            name: name.to_string(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn finish(self, exit_code: u8) -> RunReport {
        RunReport {
            command: self.command,
            inputs: self.inputs,
            outputs: self.outputs,
            exit_code,
            elapsed_ms: self.started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}
