use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sumchoice_core::sumchoice::Transcript;

use crate::case::Provenance;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const UNKNOWN: i32 = 3;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The budget ran out; bounds are certified where known.
    Unknown { lower: Option<u32>, upper: Option<u32> },
    /// Research-mode case without an expectation.
    Reported,
    /// The case could not be evaluated at all.
    Error { message: String },
}

impl Outcome {
    fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Unknown { .. } => "unknown",
            Outcome::Reported => "report",
            Outcome::Error { .. } => "ERROR",
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fail | Outcome::Error { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub description: String,
    pub provenance: Provenance,
    pub blocking: bool,
    pub outcome: Outcome,
    pub expected: Value,
    pub computed: Value,
    pub elapsed_ms: f64,
    pub stats: Transcript,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
    pub reported: usize,
    /// Non-blocking cases that did not pass.
    pub flagged: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(suite: &str, cases: Vec<CaseReport>, elapsed_ms: f64) -> Self {
        let mut s = Summary::default();
        for c in &cases {
            if !c.blocking && !matches!(c.outcome, Outcome::Pass | Outcome::Reported) {
                s.flagged += 1;
                continue;
            }
            match c.outcome {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail | Outcome::Error { .. } => s.failed += 1,
                Outcome::Unknown { .. } => s.unknown += 1,
                Outcome::Reported => s.reported += 1,
            }
        }
        RunReport { suite: suite.to_string(), cases, summary: s, elapsed_ms }
    }

    /// 1 if a blocking case failed, otherwise 3 if one is unknown, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            exit::FAILED
        } else if self.summary.unknown > 0 {
            exit::UNKNOWN
        } else {
            exit::OK
        }
    }

    pub fn all_passed(&self) -> bool {
        self.exit_code() == exit::OK
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// One JSON object per case followed by a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mut v = serde_json::to_value(c).unwrap_or(Value::Null);
            if let Value::Object(m) = &mut v {
                m.insert("suite".into(), Value::String(self.suite.clone()));
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        let tail = serde_json::json!({ "suite": self.suite, "summary": self.summary, "elapsed_ms": self.elapsed_ms, "exit_code": self.exit_code() });
        out.push_str(&tail.to_string());
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let width = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        for c in &self.cases {
            let flag = if c.blocking { "" } else { " (non-blocking)" };
            let _ = writeln!(out, "  {:<7} {:<width$} {:>9.1} ms  {}{}", c.outcome.label(), c.id, c.elapsed_ms, c.provenance, flag);
            match &c.outcome {
                Outcome::Fail => {
                    let _ = writeln!(out, "          expected {}", c.expected);
                    let _ = writeln!(out, "          computed {}", c.computed);
                }
                Outcome::Unknown { lower, upper } => {
                    let show = |b: &Option<u32>| b.map_or("?".to_string(), |v| v.to_string());
                    let _ = writeln!(out, "          bounds [{}, {}]", show(lower), show(upper));
                }
                Outcome::Error { message } => {
                    let _ = writeln!(out, "          {message}");
                }
                _ => {}
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} unknown, {} reported, {} flagged in {:.1} s",
            s.passed,
            s.failed,
            s.unknown,
            s.reported,
            s.flagged,
            self.elapsed_ms / 1e3
        );
        out
    }
}
