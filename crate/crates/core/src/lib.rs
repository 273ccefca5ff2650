//! Exact computation of graph coloring villainy.
//!
//! Given a graph `G` and an assignment `c` of a color multiset to its
//! vertices, the villainy `B(c)` is the minimum number of vertices that must
//! be recolored to reach a proper coloring with the same per-color
//! multiplicities; weak villainy `B_w(c)` relaxes the target to any proper
//! coloring over the same palette. `B(G)` and `B_w(G)` maximize those
//! quantities over all rearrangements of optimal proper colorings. This crate
//! computes all four exactly on small graphs, with machine-checkable
//! certificates, plus the structural predicates and closed-form values needed
//! to cross-check them.

pub mod canon;
pub mod characterize;
pub mod coloring;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod structure;
pub mod villainy;

pub use canon::{canonical_form, canonical_relabeling, CanonicalForm};
pub use characterize::{
    classify_theorem5, known_villainy, known_weak_villainy, lemma_implications, ClassLabel,
    KnownValue, LemmaImplication,
};
pub use coloring::{
    chromatic_number, enumerate_proper_colorings, feasible_multiplicities, Coloring,
    MultiplicityVector,
};
pub use enumerate::enumerate_nonisomorphic;
pub use family::{build_family, FamilySpec};
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines};
pub use structure::{analyze_structure, maximum_matching_size, StructureReport};
