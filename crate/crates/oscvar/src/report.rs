//! The shared machine-readable report: one record per check plus an overall
//! status, serialized deterministically.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::annihilator::AnnihilatorError;
use crate::detvar::DetError;
use crate::exactpoly::PolyError;
use crate::filtration::FiltrationError;
use crate::oscrep::OscError;

/// Outcome of one check.
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

/// Why a check produced no verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckError {
    /// The configuration lies outside the regime the check covers.
    Skipped(String),
    /// The computation itself failed.
    Failed(String),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Skipped(s) | CheckError::Failed(s) => f.write_str(s),
        }
    }
}

impl From<PolyError> for CheckError {
    fn from(e: PolyError) -> Self {
        CheckError::Failed(e.to_string())
    }
}

impl From<OscError> for CheckError {
    fn from(e: OscError) -> Self {
        match e {
            OscError::NoProjection => CheckError::Skipped(e.to_string()),
            _ => CheckError::Failed(e.to_string()),
        }
    }
}

impl From<FiltrationError> for CheckError {
    fn from(e: FiltrationError) -> Self {
        match e {
            FiltrationError::Unsupported(_) => CheckError::Skipped(e.to_string()),
            FiltrationError::Osc(inner) => inner.into(),
            _ => CheckError::Failed(e.to_string()),
        }
    }
}

impl From<DetError> for CheckError {
    fn from(e: DetError) -> Self {
        match e {
            DetError::InvalidRing(_) => CheckError::Skipped(e.to_string()),
            _ => CheckError::Failed(e.to_string()),
        }
    }
}

impl From<AnnihilatorError> for CheckError {
    fn from(e: AnnihilatorError) -> Self {
        match e {
            AnnihilatorError::Unsupported(_) => CheckError::Skipped(e.to_string()),
            AnnihilatorError::Filtration(inner) => inner.into(),
            AnnihilatorError::Osc(inner) => inner.into(),
            _ => CheckError::Failed(e.to_string()),
        }
    }
}

/// A verdict with its numeric payload.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub pass: bool,
    pub payload: Value,
}

impl Verdict {
    /// A verdict carrying a serialized payload.
    pub fn new(pass: bool, payload: impl Serialize) -> Self {
        Verdict {
            pass,
            payload: serde_json::to_value(payload).expect("report payloads serialize"),
        }
    }
}

/// One check in a report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// Short tag naming the statement being checked.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    /// Runs `f` and records its verdict, skip reason or failure, with timing.
    pub fn run<F>(name: &str, anchor: &str, f: F) -> CheckRecord
    where
        F: FnOnce() -> Result<Verdict, CheckError>,
    {
        let start = Instant::now();
        let result = f();
        let mut rec = Self::from_result(name, anchor, result);
        rec.elapsed_ms = Some(duration_ms(start.elapsed()));
        rec
    }

    /// A record from a finished computation, without timing.
    pub fn from_result(name: &str, anchor: &str, result: Result<Verdict, CheckError>) -> CheckRecord {
        let (status, reason, payload) = match result {
            Ok(v) => (if v.pass { Status::Pass } else { Status::Fail }, None, v.payload),
            Err(CheckError::Skipped(r)) => (Status::Skipped, Some(r), Value::Null),
            Err(CheckError::Failed(r)) => (Status::Fail, Some(r), Value::Null),
        };
        CheckRecord {
            name: name.to_string(),
            anchor: anchor.to_string(),
            status,
            reason,
            payload,
            elapsed_ms: None,
        }
    }

    /// A skipped record.
    pub fn skipped(name: &str, anchor: &str, reason: &str) -> CheckRecord {
        Self::from_result(name, anchor, Err(CheckError::Skipped(reason.to_string())))
    }
}

fn duration_ms(d: Duration) -> u64 {
    u64::try_from(d.as_millis()).unwrap_or(u64::MAX)
}

/// A full report: tool identification, the echoed run specification, the
/// checks in declaration order and the overall status.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub spec: Value,
    pub checks: Vec<CheckRecord>,
    pub overall: Status,
}

impl Report {
    /// An empty report for `command` with the echoed run specification.
    pub fn new(command: &str, spec: impl Serialize) -> Self {
        Report {
            tool: "oscvar".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            spec: serde_json::to_value(spec).expect("run specifications serialize"),
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    /// Appends a record and updates the overall status.
    pub fn push(&mut self, rec: CheckRecord) {
        if rec.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(rec);
    }

    /// Whether no check failed.
    pub fn passed(&self) -> bool {
        self.overall != Status::Fail
    }

    /// JSON with keys in sorted order. Elapsed times are included only when
    /// `timings` is set, so that reports of identical runs are byte-identical.
    pub fn to_json(&self, timings: bool) -> String {
        let mut value = serde_json::to_value(self).expect("reports serialize");
        if !timings {
            if let Some(Value::Array(checks)) = value.get_mut("checks") {
                for c in checks {
                    if let Some(obj) = c.as_object_mut() {
                        obj.remove("elapsed_ms");
                    }
                }
            }
        }
        let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
        out.push('\n');
        out
    }

    /// Human-readable summary: one line per check and the overall status.
    pub fn to_text(&self, timings: bool) -> String {
        let mut out = format!("{} {} {}\n", self.tool, self.version, self.command);
        for c in &self.checks {
            out.push_str(&format!("[{}] {} ({})", c.status, c.name, c.anchor));
            if let Some(r) = &c.reason {
                out.push_str(&format!(": {r}"));
            }
            if let (true, Some(ms)) = (timings, c.elapsed_ms) {
                out.push_str(&format!(" in {ms} ms"));
            }
            out.push('\n');
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}
