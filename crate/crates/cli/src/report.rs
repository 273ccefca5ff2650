//! Report envelope shared by every sweep command, with deterministic JSON
//! and CSV renderings.
//!
//! Determinism contract: rows are sorted by (order, graph6 bytes), every
//! list in the summary is sorted, and nothing time- or machine-dependent
//! (wall-clock duration, worker count) is serialized. Those go to stderr.

use serde::{Deserialize, Serialize};
use std::io::Write;

pub const SCHEMA_VERSION: &str = "1.0.0";

/// One graph's results. Every field is always serialized (null when absent)
/// so the CSV and JSON renderings stay column-compatible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub graph6: String,
    pub chi: usize,
    pub b: Option<usize>,
    pub b_weak: Option<usize>,
    pub label: Option<String>,
    pub known_b: Option<usize>,
    pub known_b_weak: Option<usize>,
    /// Cycles command only: the conjectured value k for C_{2k+1}.
    pub conjectured: Option<usize>,
    /// Cycles command only: does computed B equal the conjectured value?
    pub agree: Option<bool>,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Parameters {
    pub max_n: Option<usize>,
    pub max_k: Option<usize>,
    pub mode: String,
    pub exact_bound: usize,
    pub time_budget_seconds: Option<u64>,
    pub input: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParityTally {
    pub even: usize,
    pub odd: usize,
    pub odd_graphs: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Summary {
    pub graph_count: usize,
    /// graph6 strings of rows that falsify a checked statement.
    pub counterexamples: Vec<String>,
    /// graph6 strings of rows where a formula disagrees with computation
    /// outside the adjudicated family.
    pub mismatches: Vec<String>,
    /// graph6 strings routed to the adjudication data instead of failing.
    pub adjudicated: Vec<String>,
    pub parity_b: Option<ParityTally>,
    pub parity_b_weak: Option<ParityTally>,
    /// True when the time budget cut the sweep short.
    pub partial: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: String,
    pub kind: String,
    pub parameters: Parameters,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn new(kind: &str, parameters: Parameters) -> SweepReport {
        SweepReport {
            schema_version: SCHEMA_VERSION.to_string(),
            kind: kind.to_string(),
            parameters,
            rows: Vec::new(),
            summary: Summary::default(),
        }
    }

    /// Sorts rows and summary lists into the canonical report order.
    pub fn finalize(&mut self) {
        self.rows
            .sort_by(|a, b| (a.n, a.graph6.as_bytes()).cmp(&(b.n, b.graph6.as_bytes())));
        self.summary.counterexamples.sort();
        self.summary.mismatches.sort();
        self.summary.adjudicated.sort();
        if let Some(t) = &mut self.summary.parity_b {
            t.odd_graphs.sort();
        }
        if let Some(t) = &mut self.summary.parity_b_weak {
            t.odd_graphs.sort();
        }
        self.summary.graph_count = self.rows.len();
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n", "graph6", "chi", "b", "b_weak", "label", "known_b", "known_b_weak",
            "conjectured", "agree", "flags",
        ])
        .expect("csv header writes");
        for row in &self.rows {
            let opt = |v: &Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
            w.write_record([
                row.n.to_string(),
                row.graph6.clone(),
                row.chi.to_string(),
                opt(&row.b),
                opt(&row.b_weak),
                row.label.clone().unwrap_or_default(),
                opt(&row.known_b),
                opt(&row.known_b_weak),
                opt(&row.conjectured),
                row.agree.map(|a| a.to_string()).unwrap_or_default(),
                row.flags.join(";"),
            ])
            .expect("csv row writes");
        }
        String::from_utf8(w.into_inner().expect("csv flushes")).expect("csv is utf-8")
    }
}

/// The single-graph inspection report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InspectReport {
    pub schema_version: String,
    pub kind: String,
    pub input: String,
    pub graph6: String,
    pub n: usize,
    pub chi: usize,
    pub b: CertificateJson,
    pub b_weak: CertificateJson,
    pub label: Option<String>,
    pub known_b: Option<usize>,
    pub known_b_weak: Option<usize>,
    pub lemmas: Vec<LemmaJson>,
    pub consistency: Consistency,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub value: usize,
    pub worst: Vec<u8>,
    pub repair: Vec<u8>,
    pub changed: Vec<usize>,
    pub mode: String,
    pub exhaustive: bool,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaJson {
    pub id: String,
    pub bound: usize,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Consistency {
    /// Null when no closed form applies.
    pub known_b_matches: Option<bool>,
    pub known_b_weak_matches: Option<bool>,
    /// B=2 implies a non-null label.
    pub b2_label_consistent: bool,
}

impl InspectReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Writes `text` to `out` (or stdout when absent).
pub fn emit(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}
