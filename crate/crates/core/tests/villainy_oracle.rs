//! Cross-checks the pruned villainy search against a naive reference that
//! scans every palette assignment with no ordering tricks, no branch
//! pruning, and no stream sharing. The two implementations share only the
//! `Graph` adjacency accessors and `chromatic_number`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use villainy_core::coloring::{chromatic_number, feasible_multiplicities};
use villainy_core::enumerate::enumerate_nonisomorphic;
use villainy_core::graph::Graph;
use villainy_core::villainy::{
    repair_distance, villainy_with, OuterDomain, RepairMode, RepairOutcome, DEFAULT_EXACT_BOUND,
};
use villainy_core::Coloring;

/// All k^n color vectors in lexicographic order.
fn all_assignments(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n];
    loop {
        out.push(current.clone());
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            if usize::from(current[pos]) + 1 < k {
                current[pos] += 1;
                current[pos + 1..].fill(0);
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if n == 0 {
            return out;
        }
    }
}

fn is_proper(g: &Graph, h: &[u8]) -> bool {
    (0..g.order()).all(|u| {
        ((u + 1)..g.order()).all(|v| !g.has_edge(u, v) || h[u] != h[v])
    })
}

fn labeled_counts(h: &[u8], k: usize) -> Vec<usize> {
    let mut counts = vec![0usize; k];
    for &c in h {
        counts[usize::from(c)] += 1;
    }
    counts
}

fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Minimum recolorings from `c` to an admissible proper coloring, plus the
/// lexicographically smallest closest repair, by exhaustive scan.
fn naive_repair(g: &Graph, c: &[u8], k: usize, mode: RepairMode) -> Option<(usize, Vec<u8>)> {
    let target = labeled_counts(c, k);
    let mut best: Option<(usize, Vec<u8>)> = None;
    for h in all_assignments(g.order(), k) {
        if !is_proper(g, &h) {
            continue;
        }
        if mode == RepairMode::Strong && labeled_counts(&h, k) != target {
            continue;
        }
        let d = hamming(c, &h);
        if best.as_ref().is_none_or(|(b, _)| d < *b) {
            best = Some((d, h));
        }
    }
    best
}

/// max over assignments whose sorted profile is feasible of the naive repair.
fn naive_graph_villainy(g: &Graph, mode: RepairMode) -> usize {
    let k = chromatic_number(g);
    let feasible: Vec<Vec<usize>> = feasible_multiplicities(g)
        .into_iter()
        .map(|m| m.counts().to_vec())
        .collect();
    let mut worst = 0;
    for c in all_assignments(g.order(), k) {
        let mut sorted = labeled_counts(&c, k);
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if !feasible.contains(&sorted) {
            continue;
        }
        let (d, _) = naive_repair(g, &c, k, mode).expect("feasible profile repairs");
        worst = worst.max(d);
    }
    worst
}

#[test]
fn graph_villainy_matches_naive_search_up_to_order_5() {
    for n in 1..=5 {
        for g in enumerate_nonisomorphic(n, None).unwrap() {
            for mode in [RepairMode::Strong, RepairMode::Weak] {
                let expected = naive_graph_villainy(&g, mode);
                let cert =
                    villainy_with(&g, mode, OuterDomain::FeasibleProfiles, DEFAULT_EXACT_BOUND)
                        .unwrap();
                assert_eq!(
                    cert.value, expected,
                    "n={n} mode={mode:?} edges={:?}",
                    g.edges()
                );
                cert.verify(&g).unwrap();
            }
        }
    }
}

#[test]
fn repair_distance_matches_naive_on_random_triples() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.random_range(2..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.45) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let k = chromatic_number(&g);
        let assignment: Vec<u8> = (0..n).map(|_| rng.random_range(0..k) as u8).collect();
        let c = Coloring::new(assignment.clone(), k).unwrap();
        let mode = if rng.random_bool(0.5) { RepairMode::Strong } else { RepairMode::Weak };

        let engine = repair_distance(&g, &c, mode);
        match naive_repair(&g, &assignment, k, mode) {
            Some((value, repair)) => {
                let RepairOutcome::Feasible { value: got, repair: got_repair } = engine else {
                    panic!("engine infeasible where oracle repaired (n={n})");
                };
                assert_eq!(got, value, "distance mismatch (n={n}, mode={mode:?})");
                assert_eq!(
                    got_repair.assignment(),
                    &repair[..],
                    "tie-break mismatch (n={n}, mode={mode:?})"
                );
                // Duality: distance = n - best agreement over the stream.
                assert_eq!(value, n - c.agreement(&got_repair));
            }
            None => assert_eq!(engine, RepairOutcome::Infeasible),
        }
        checked += 1;
    }
}

#[test]
fn strong_repair_distance_is_never_one() {
    // Recoloring a single vertex changes two labeled multiplicities, so a
    // strong repair can never cost exactly 1.
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..300 {
        let n = rng.random_range(2..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let k = chromatic_number(&g);
        let assignment: Vec<u8> = (0..n).map(|_| rng.random_range(0..k) as u8).collect();
        let c = Coloring::new(assignment, k).unwrap();
        if let Some(value) = repair_distance(&g, &c, RepairMode::Strong).value() {
            assert_ne!(value, 1);
        }
    }
}

#[test]
fn weak_villainy_never_exceeds_villainy_up_to_order_5() {
    for n in 1..=5 {
        for g in enumerate_nonisomorphic(n, None).unwrap() {
            let strong =
                villainy_with(&g, RepairMode::Strong, OuterDomain::FeasibleProfiles, 8).unwrap();
            let weak =
                villainy_with(&g, RepairMode::Weak, OuterDomain::FeasibleProfiles, 8).unwrap();
            assert!(weak.value <= strong.value, "n={n} edges={:?}", g.edges());
        }
    }
}
