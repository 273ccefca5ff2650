//! Exhaustive enumeration of non-isomorphic graphs of a given order.
//!
//! Representatives of order `n` are produced by extending every
//! representative of order `n - 1` with each of the `2^(n-1)` possible
//! new-vertex neighborhoods and deduplicating by canonical form. Every
//! isomorphism class of order `n` contains a graph whose last vertex deletion
//! lands in some class of order `n - 1`, so the extension step is exhaustive.

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order the exhaustive enumeration accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("cannot enumerate graphs of order 0")]
    ZeroOrder,
    #[error(
        "exhaustive enumeration is limited to orders 1..={MAX_ENUMERATION_ORDER} \
         (order {0} requested); supply larger graphs as a newline-separated \
         graph6 file instead"
    )]
    OrderTooLarge(usize),
}

/// One representative per isomorphism class of order `n`, sorted by canonical
/// form. `predicate`, when given, filters the finished representatives; it
/// never affects which classes are discovered.
pub fn enumerate_nonisomorphic(
    n: usize,
    predicate: Option<&dyn Fn(&Graph) -> bool>,
) -> Result<Vec<Graph>, EnumerateError> {
    let forms = enumerate_forms(n)?;
    let mut graphs: Vec<Graph> = forms.iter().map(CanonicalForm::to_graph).collect();
    if let Some(keep) = predicate {
        graphs.retain(|g| keep(g));
    }
    Ok(graphs)
}

/// Sorted canonical forms of all isomorphism classes of order `n`.
pub fn enumerate_forms(n: usize) -> Result<BTreeSet<CanonicalForm>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::ZeroOrder);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderTooLarge(n));
    }
    let single = Graph::empty(1).expect("order 1 is valid");
    let mut level: BTreeSet<CanonicalForm> =
        [canonical_form(&single).expect("order 1 is canonicalizable")].into();
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for rep in &level {
            let base = rep.to_graph();
            for neighborhood in 0..1u64 << (order - 1) {
                let extended = base
                    .with_appended_vertex(neighborhood)
                    .expect("order stays within bounds");
                next.insert(
                    canonical_form(&extended).expect("order stays within the canon bound"),
                );
            }
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_classes() {
        let graphs = enumerate_nonisomorphic(3, None).unwrap();
        assert_eq!(graphs.len(), 4);
        let mut edge_counts: Vec<usize> = graphs.iter().map(Graph::edge_count).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![0, 1, 2, 3]);
    }

    #[test]
    fn known_counts_through_order_six() {
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            assert_eq!(enumerate_nonisomorphic(n, None).unwrap().len(), expected);
        }
    }

    #[test]
    fn predicate_filters_output_only() {
        let triangle_free = |g: &Graph| g.find_triangle().is_none();
        let filtered = enumerate_nonisomorphic(4, Some(&triangle_free)).unwrap();
        let all = enumerate_nonisomorphic(4, None).unwrap();
        assert!(filtered.len() < all.len());
        assert!(filtered.iter().all(|g| g.find_triangle().is_none()));
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let graphs = enumerate_nonisomorphic(5, None).unwrap();
        let forms: Vec<CanonicalForm> = graphs
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted);
    }

    #[test]
    fn refuses_out_of_range_orders() {
        assert_eq!(enumerate_nonisomorphic(0, None), Err(EnumerateError::ZeroOrder));
        let err = enumerate_nonisomorphic(9, None).unwrap_err();
        assert_eq!(err, EnumerateError::OrderTooLarge(9));
        assert!(err.to_string().contains("graph6"));
    }
}
