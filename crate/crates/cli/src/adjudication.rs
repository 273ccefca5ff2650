//! The frozen measurement of the contested family: balanced six-vertex
//! connected bipartite graphs.
//!
//! Two closed-form statements disagree on these graphs. The bipartite
//! formula assigns them B = 2*ceil(6/4) = 4, while the B=2 candidate list
//! names exactly this family (its Case2). The exact search settles the
//! number empirically; this module freezes that measurement into versioned
//! data so later runs diff against it instead of silently re-deciding.
//! Sweeps route these graphs here rather than into the mismatch list.

use serde::{Deserialize, Serialize};
use villainy_core::canon::canonical_form;
use villainy_core::structure::{bipartition, components};
use villainy_core::{emit_graph6, Graph};

/// The data file compiled into the binary; regenerate with
/// `villainy sweep-bipartite --write-adjudication <path>`.
pub const EMBEDDED: &str = include_str!("../data/case2_adjudication.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdjudicationFile {
    pub schema_version: String,
    pub kind: String,
    pub description: String,
    pub rows: Vec<AdjudicationRow>,
}

/// Frozen values for one contested graph, keyed by the graph6 text of its
/// canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjudicationRow {
    pub graph6: String,
    pub computed_b: usize,
    pub computed_b_weak: usize,
    pub formula_b: usize,
    pub formula_b_weak: usize,
}

pub fn load_embedded() -> AdjudicationFile {
    serde_json::from_str(EMBEDDED).expect("embedded adjudication data parses")
}

/// True for members of the contested family.
pub fn is_contested(g: &Graph) -> bool {
    g.order() == 6
        && components(g).len() == 1
        && bipartition(g).is_some_and(|(x, _)| x.count_ones() == 3)
}

/// Canonical graph6 key for looking a graph up in the frozen data. Only
/// called on order-6 graphs, well inside the canonicalization bound.
pub fn canonical_key(g: &Graph) -> String {
    let representative = canonical_form(g).expect("contested graphs have order 6").to_graph();
    emit_graph6(&representative).expect("order 6 fits graph6")
}
