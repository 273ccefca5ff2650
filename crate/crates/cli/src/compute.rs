//! Per-graph computation and the budget-aware, deterministic sweep driver.

use crate::report::Row;
use crate::{HarnessError, Mode};
use rayon::prelude::*;
use std::time::Instant;
use villainy_core::characterize::{classify_theorem5, known_villainy, known_weak_villainy};
use villainy_core::coloring::chromatic_number;
use villainy_core::villainy::{villainy_with, OuterDomain, RepairMode, VillainyCertificate};
use villainy_core::{emit_graph6, Graph};

/// Work items sharing one deadline and one exact-search bound.
pub struct Driver {
    pub pool: rayon::ThreadPool,
    pub deadline: Option<Instant>,
    pub bound: usize,
}

/// How far a budgeted sweep got.
pub struct Coverage {
    pub partial: bool,
    pub notes: Vec<String>,
}

impl Driver {
    pub fn new(workers: usize, budget_seconds: Option<u64>, bound: usize) -> Result<Driver, HarnessError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| HarnessError::Resource(format!("worker pool: {e}")))?;
        let deadline = budget_seconds.map(|s| Instant::now() + std::time::Duration::from_secs(s));
        Ok(Driver { pool, deadline, bound })
    }

    /// Runs `work` over every graph, deadline-checked between blocks of 64
    /// graphs, never mid-graph. Output order matches input order.
    pub fn run<F>(&self, graphs: &[Graph], work: F) -> (Vec<Row>, Coverage)
    where
        F: Fn(&Graph) -> Row + Sync,
    {
        let mut rows = Vec::with_capacity(graphs.len());
        let mut coverage = Coverage { partial: false, notes: Vec::new() };
        for block in graphs.chunks(64) {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                coverage.partial = true;
                coverage.notes.push(format!(
                    "time budget exhausted after {} of {} graphs; rows cover a prefix of \
                     the enumeration order",
                    rows.len(),
                    graphs.len()
                ));
                break;
            }
            let block_rows: Vec<Row> =
                self.pool.install(|| block.par_iter().map(&work).collect());
            rows.extend(block_rows);
        }
        (rows, coverage)
    }
}

/// One graph's full measurement. Certificates are re-verified on the spot;
/// a verification failure is an engine defect, not bad input, so it panics.
pub fn graph_row(g: &Graph, mode: Mode, bound: usize) -> Row {
    let chi = chromatic_number(g);
    let check = |cert: &VillainyCertificate| {
        cert.verify(g).expect("freshly computed certificate verifies");
        cert.value
    };
    let b = mode
        .strong()
        .then(|| exact(g, RepairMode::Strong, bound))
        .map(|c| check(&c));
    let b_weak = mode
        .weak()
        .then(|| exact(g, RepairMode::Weak, bound))
        .map(|c| check(&c));
    Row {
        n: g.order(),
        graph6: emit_graph6(g).expect("sweep graphs fit graph6"),
        chi,
        b,
        b_weak,
        label: classify_theorem5(g).map(|l| l.to_string()),
        known_b: known_villainy(g).map(|k| k.value),
        known_b_weak: known_weak_villainy(g).map(|k| k.value),
        conjectured: None,
        agree: None,
        flags: Vec::new(),
    }
}

/// Exact villainy at an explicit bound; bound violations are caught before
/// sweeps start, so this cannot fail on sweep-driven inputs.
pub fn exact(g: &Graph, mode: RepairMode, bound: usize) -> VillainyCertificate {
    villainy_with(g, mode, OuterDomain::FeasibleProfiles, bound)
        .expect("order was checked against the bound before dispatch")
}
