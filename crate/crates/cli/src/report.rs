use serde::Serialize;
use std::fmt::Write as _;

use corkcalc_core::fourmanifold::{ClosedRecord, SwState, Verdict};
use corkcalc_core::swalgebra::SwComparison;

/// One record in a report, with the chain of operations that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct RecordEntry {
    pub label: String,
    pub provenance: Vec<String>,
    pub record: ClosedRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountEntry {
    pub label: String,
    pub count: Option<u64>,
    pub note: String,
}

/// Pairwise verdicts: the topological one and the smooth-invariant one, with
/// the numbers that justify them.
#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub a: String,
    pub b: String,
    pub homeo: Verdict,
    pub homeo_reason: String,
    pub sw: Option<SwComparison>,
    pub sw_detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub id: String,
    pub description: String,
    pub pass: bool,
    pub details: Vec<String>,
}

/// A full scenario run. Rendering is deterministic: identical inputs give
/// byte-identical text and JSON.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub parameters: Vec<(String, String)>,
    pub convention: String,
    pub warnings: Vec<String>,
    pub records: Vec<RecordEntry>,
    pub counts: Vec<CountEntry>,
    pub pairwise: Vec<PairVerdict>,
    pub clauses: Vec<Clause>,
    pub passed: bool,
}

impl ScenarioReport {
    pub fn new(scenario: &str, convention: &str) -> Self {
        ScenarioReport {
            scenario: scenario.to_string(),
            parameters: Vec::new(),
            convention: convention.to_string(),
            warnings: Vec::new(),
            records: Vec::new(),
            counts: Vec::new(),
            pairwise: Vec::new(),
            clauses: Vec::new(),
            passed: false,
        }
    }

    pub fn push_record(&mut self, label: &str, record: &ClosedRecord, provenance: Vec<String>) {
        self.records.push(RecordEntry {
            label: label.to_string(),
            provenance,
            record: record.clone(),
        });
    }

    pub fn push_clause(&mut self, id: &str, description: &str, pass: bool, details: Vec<String>) {
        self.clauses.push(Clause {
            id: id.to_string(),
            description: description.to_string(),
            pass,
            details,
        });
    }

    /// Seal the verdict: the report passes iff every clause does. Every
    /// embedded record is re-validated before emission; a violation here is a
    /// construction bug, not a gradable outcome.
    pub fn finalize(&mut self) {
        for entry in &self.records {
            if let Err(err) = entry.record.validate() {
                panic!("record {} violates its invariants: {err}", entry.label);
            }
        }
        self.passed = self.clauses.iter().all(|c| c.pass);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization is total");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== cork-calculus report ==");
        let _ = writeln!(out, "scenario: {}", self.scenario);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(out, "parity convention: {}", self.convention);
        if !self.warnings.is_empty() {
            let _ = writeln!(out, "warnings:");
            for w in &self.warnings {
                let _ = writeln!(out, "  ! {w}");
            }
        }
        let _ = writeln!(out, "records:");
        for entry in &self.records {
            let _ = writeln!(out, "  [{}] {}", entry.label, describe_record(&entry.record));
            for p in &entry.provenance {
                let _ = writeln!(out, "      via {p}");
            }
        }
        if !self.counts.is_empty() {
            let _ = writeln!(out, "basic class counts:");
            for c in &self.counts {
                let shown = c.count.map_or_else(|| "unknown".to_string(), |n| n.to_string());
                if c.note.is_empty() {
                    let _ = writeln!(out, "  N({}) = {shown}", c.label);
                } else {
                    let _ = writeln!(out, "  N({}) = {shown}   ({})", c.label, c.note);
                }
            }
        }
        if !self.pairwise.is_empty() {
            let _ = writeln!(out, "pairwise verdicts:");
            for p in &self.pairwise {
                let sw = match (&p.sw, p.sw_detail.is_empty()) {
                    (Some(v), true) => format!("; SW {v}"),
                    (Some(v), false) => format!("; SW {v} ({})", p.sw_detail),
                    (None, true) => String::new(),
                    (None, false) => format!("; SW n/a ({})", p.sw_detail),
                };
                let _ =
                    writeln!(out, "  {} / {}: {} [{}]{}", p.a, p.b, p.homeo, p.homeo_reason, sw);
            }
        }
        let _ = writeln!(out, "clauses:");
        for c in &self.clauses {
            let _ = writeln!(
                out,
                "  [{}] {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.description
            );
            for d in &c.details {
                let _ = writeln!(out, "      - {d}");
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

pub fn describe_record(rec: &ClosedRecord) -> String {
    let sw = match &rec.sw {
        SwState::Zero => "0 (vanishes)".to_string(),
        SwState::Unknown => "unknown".to_string(),
        SwState::Set(beta) => format!("|beta| = {}", beta.count()),
    };
    let mut extras = Vec::new();
    if rec.markers.cusp {
        extras.push("cusp".to_string());
    }
    if rec.markers.s2xs2_summand {
        extras.push("splits off S2xS2".to_string());
    }
    if rec.markers.cp2bar_summands > 0 {
        extras.push(format!("{} CP2bar summand(s)", rec.markers.cp2bar_summands));
    }
    if let Some(k) = rec.handle_count_meta {
        extras.push(format!("handle count meta k = {k}"));
    }
    let extras =
        if extras.is_empty() { String::new() } else { format!("  [{}]", extras.join(", ")) };
    format!(
        "e={} sigma={} b2+={} b2-={} parity={} spin={} SW={}{}",
        rec.e, rec.sigma, rec.b2_plus, rec.b2_minus, rec.parity, rec.spin, sw, extras
    )
}
