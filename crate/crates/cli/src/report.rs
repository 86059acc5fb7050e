//! The JSON envelope printed for every run.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub subcommand: String,
    pub input_digest: String,
    pub version: &'static str,
    pub payload: Value,
    pub wall_time_ms: u128,
}

/// Content hash over a command's inputs: scalar arguments by value and
/// files by their bytes, so moving a file does not change the digest.
pub struct InputDigest(Sha256);

impl InputDigest {
    pub fn new(subcommand: &str) -> Self {
        let mut d = InputDigest(Sha256::new());
        d.scalar("subcommand", subcommand);
        d
    }

    pub fn scalar(&mut self, name: &str, value: impl std::fmt::Display) {
        self.0.update(format!("{name}={value}\n").as_bytes());
    }

    pub fn file(&mut self, name: &str, bytes: &[u8]) {
        self.0
            .update(format!("{name}:{}\n", bytes.len()).as_bytes());
        self.0.update(bytes);
    }

    pub fn finish(self) -> String {
        hex::encode(self.0.finalize())
    }
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
