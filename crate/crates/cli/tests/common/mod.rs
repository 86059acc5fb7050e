//! Helpers for driving the `kempe` binary.

#![allow(dead_code)]

use std::path::Path;
use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::Value;

pub const BIN: &str = env!("CARGO_BIN_EXE_kempe");

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }

    pub fn payload(&self) -> Value {
        self.json()["payload"].clone()
    }
}

pub fn kempe(args: &[&str], dir: &Path) -> Run {
    let out = Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

/// Panics with every validation error if `value` does not match the schema.
pub fn assert_valid(name: &str, value: &Value) {
    let schema = schema(name);
    let compiled =
        JSONSchema::compile(&schema).unwrap_or_else(|e| panic!("schema {name} compiles: {e}"));
    if let Err(errors) = compiled.validate(value) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("{name} schema rejects value: {msgs:#?}\n{value:#}");
    };
}

/// Schema name for a subcommand's payload.
pub fn payload_schema(subcommand: &str) -> String {
    subcommand.replace(' ', "-")
}

/// Validates the envelope and its payload.
pub fn assert_report(run: &Run) -> Value {
    let report = run.json();
    assert_valid("report", &report);
    let sub = report["subcommand"].as_str().unwrap().to_string();
    assert_valid(&payload_schema(&sub), &report["payload"]);
    if sub == "batch" {
        for task in report["payload"]["tasks"].as_array().unwrap() {
            if !task["payload"].is_null() {
                assert_valid(
                    &payload_schema(task["subcommand"].as_str().unwrap()),
                    &task["payload"],
                );
            }
        }
    }
    report
}

pub fn pattern_file(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/patterns")
        .join(format!("{name}.txt"))
        .to_string_lossy()
        .into_owned()
}
