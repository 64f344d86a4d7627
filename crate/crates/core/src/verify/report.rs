use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::abbreviate;
use crate::ring::{Coefficient, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Mismatch,
    ConjecturePass,
    ConjectureFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Mismatch => "mismatch",
            Status::ConjecturePass => "conjecture-pass",
            Status::ConjectureFail => "conjecture-fail",
        }
    }
}

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub check: String,
    pub lhs: String,
    pub rhs: String,
}

/// Supporting data attached to a report, such as an explicit matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exhibit {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Value,
    pub n: Vec<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub witnesses: Vec<Witness>,
    pub seed: u64,
    /// Number of comparisons that were made.
    pub checks: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exhibits: Vec<Exhibit>,
}

impl VerificationReport {
    /// True unless a proven identity failed somewhere.
    pub fn passed(&self) -> bool {
        self.status != Status::Mismatch
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// Collects comparisons for one report.
pub(crate) struct Checker {
    conjecture: bool,
    started: Instant,
    ns: BTreeSet<usize>,
    checks: usize,
    /// Failures of statements that are known to hold.
    hard: Vec<Witness>,
    /// Failures of the conjectured statement itself.
    soft: Vec<Witness>,
    notes: Vec<String>,
    exhibits: Vec<Exhibit>,
}

impl Checker {
    pub fn new() -> Self {
        Checker {
            conjecture: false,
            started: Instant::now(),
            ns: BTreeSet::new(),
            checks: 0,
            hard: vec![],
            soft: vec![],
            notes: vec![],
            exhibits: vec![],
        }
    }

    pub fn conjecture() -> Self {
        Checker { conjecture: true, ..Checker::new() }
    }

    pub fn eq<C: Coefficient>(&mut self, n: usize, check: &str, lhs: &Polynomial<C>, rhs: &Polynomial<C>) -> bool {
        self.record(n, check, lhs == rhs, || (lhs.to_string(), rhs.to_string()), false)
    }

    /// Comparison of the conjectured statement; failures do not count as mismatches.
    pub fn conjectured<C: Coefficient>(&mut self, n: usize, check: &str, lhs: &Polynomial<C>, rhs: &Polynomial<C>) -> bool {
        self.record(n, check, lhs == rhs, || (lhs.to_string(), rhs.to_string()), true)
    }

    /// A failure that has no two sides, e.g. an inexact division.
    pub fn fail(&mut self, n: usize, check: &str, what: String) {
        self.record(n, check, false, || (what, String::new()), false);
    }

    fn record(&mut self, n: usize, check: &str, ok: bool, sides: impl FnOnce() -> (String, String), soft: bool) -> bool {
        self.ns.insert(n);
        self.checks += 1;
        if !ok {
            let (lhs, rhs) = sides();
            let w = Witness { n, check: check.to_string(), lhs: abbreviate(lhs), rhs: abbreviate(rhs) };
            if soft {
                self.soft.push(w);
            } else {
                self.hard.push(w);
            }
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn exhibit(&mut self, label: impl Into<String>, value: impl Into<String>) {
        self.exhibits.push(Exhibit { label: label.into(), value: value.into() });
    }

    pub fn finish(self, identity: &str, params: Value, seed: u64) -> VerificationReport {
        let status = match (self.conjecture, self.hard.is_empty(), self.soft.is_empty()) {
            (_, false, _) => Status::Mismatch,
            (false, true, _) => Status::Verified,
            (true, true, true) => Status::ConjecturePass,
            (true, true, false) => Status::ConjectureFail,
        };
        let mut witnesses = self.hard;
        witnesses.extend(self.soft);
        VerificationReport {
            identity: identity.to_string(),
            params,
            n: self.ns.into_iter().collect(),
            status,
            elapsed_ms: Some(self.started.elapsed().as_millis() as u64),
            witnesses,
            seed,
            checks: self.checks,
            notes: self.notes,
            exhibits: self.exhibits,
        }
    }
}
