use serde::Serialize;
use serde_json::Value;

use crate::io::InputDigest;

/// Exit status contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// affirmative answer or passing suite
    Yes = 0,
    /// negative answer with certificate, or a violation
    No = 1,
    /// budget exhausted, answer unknown
    Unknown = 2,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        }
    }
}

/// The machine-readable record of one invocation. Wall-clock time is printed
/// but kept out of the file so reruns are byte-identical.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub status: &'static str,
    pub outcome: Value,
    pub artifacts: Vec<String>,
}
