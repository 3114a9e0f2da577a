//! JSON run reports.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// JSON schema of [`RunReport`], checked against real reports in the tests.
pub const RUN_REPORT_SCHEMA: &str = r#"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "RunReport",
  "type": "object",
  "required": ["command", "input_digest", "outputs", "scale", "value", "verification", "timings"],
  "additionalProperties": false,
  "properties": {
    "command": {"type": "string"},
    "input_digest": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
    "outputs": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "vertices", "edges"],
        "additionalProperties": false,
        "properties": {
          "name": {"type": "string"},
          "vertices": {"type": "integer", "minimum": 0},
          "edges": {"type": "integer", "minimum": 0}
        }
      }
    },
    "scale": {
      "type": ["object", "null"],
      "required": ["base", "exponent"],
      "additionalProperties": false,
      "properties": {
        "base": {"type": "string"},
        "exponent": {"type": "integer", "minimum": 0}
      }
    },
    "value": {"type": ["string", "null"]},
    "verification": {
      "type": "object",
      "required": ["verdict", "detail"],
      "additionalProperties": false,
      "properties": {
        "verdict": {"enum": ["verified", "skipped:limit", "failed"]},
        "detail": {"type": "string"}
      }
    },
    "timings": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["pass", "millis"],
        "additionalProperties": false,
        "properties": {
          "pass": {"type": "string"},
          "millis": {"type": "number", "minimum": 0}
        }
      }
    }
  }
}"#;

/// Outcome of oracle verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "skipped:limit")]
    SkippedLimit,
    #[serde(rename = "failed")]
    Failed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::SkippedLimit => "skipped:limit",
            Verdict::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputSize {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
}

/// Scale `base^exponent`; the base is a decimal string since it may be large.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaleReport {
    pub base: String,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub pass: String,
    pub millis: f64,
}

/// Summary of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the input bytes (all inputs concatenated), lowercase hex.
    pub input_digest: String,
    pub outputs: Vec<OutputSize>,
    pub scale: Option<ScaleReport>,
    /// Exact value computed or decoded by the oracle, when it ran.
    pub value: Option<String>,
    pub verification: Verification,
    pub timings: Vec<Timing>,
}

impl RunReport {
    pub fn new(command: &str, input: &[u8]) -> Self {
        Self {
            command: command.to_string(),
            input_digest: sha256_hex(input),
            outputs: Vec::new(),
            scale: None,
            value: None,
            verification: Verification {
                verdict: Verdict::SkippedLimit,
                detail: "not attempted".into(),
            },
            timings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
