use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    /// A check that could not run because a computation failed.
    pub fn error(id: impl Into<String>, err: &crate::Error) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            detail: format!("error: {err}"),
        }
    }
}

/// Outcome of one suite. Field order is the serialization order; only
/// `timing_ms` varies between identical runs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
    pub parameters: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<Check>, parameters: BTreeMap<String, Value>) -> Self {
        let status = if checks.is_empty() {
            Status::Skipped
        } else if checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            status,
            checks,
            timing_ms: 0,
            parameters,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// 0 on pass, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}: {}\n", self.suite, self.status);
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}: {}\n", c.status, c.id, c.detail));
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        out.push_str(&format!(
            "{passed}/{} checks passed in {} ms\n",
            self.checks.len(),
            self.timing_ms
        ));
        out
    }
}
