//! Structured outcome of an identity sweep.
//!
//! JSON layout: `{suite, bounds, checked, failures:[{instance, witness,
//! left, right}], millis}`. Keys of `bounds` are sorted, and elements are
//! written in the literal syntax of [`crate::symfunc::literal`], so the
//! serialized form is byte-stable. `millis` is wall-clock time and is only
//! written when timing is requested; otherwise it is `0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub witness: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub bounds: BTreeMap<String, String>,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            bounds: BTreeMap::new(),
            checked: 0,
            failures: Vec::new(),
            millis: 0,
        }
    }

    pub fn bound(mut self, key: &str, value: impl ToString) -> Self {
        self.bounds.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, instance: String, witness: String, left: String, right: String) {
        self.failures.push(Failure {
            instance,
            witness,
            left,
            right,
        });
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.millis = started.elapsed().as_millis() as u64;
        self
    }

    /// Folds another report's counts and failures into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn to_json(&self, timing: bool) -> String {
        let mut copy = self.clone();
        if !timing {
            copy.millis = 0;
        }
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    /// Single-line form for streaming several reports, one per line.
    pub fn to_json_line(&self, timing: bool) -> String {
        let mut copy = self.clone();
        if !timing {
            copy.millis = 0;
        }
        serde_json::to_string(&copy).expect("report serializes")
    }

    /// Line-oriented rendering for terminals.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let bounds: Vec<String> = self.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "suite {} [{}]: {status}", self.suite, bounds.join(" "));
        let _ = writeln!(out, "  checked: {}", self.checked);
        let _ = writeln!(out, "  failures: {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(out, "  - instance: {}", f.instance);
            let _ = writeln!(out, "    witness: {}", f.witness);
            let _ = writeln!(out, "    left: {}", f.left);
            let _ = writeln!(out, "    right: {}", f.right);
        }
        if timing {
            let _ = writeln!(out, "  millis: {}", self.millis);
        }
        out
    }
}
