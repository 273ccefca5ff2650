//! Exact chromatic number and constrained enumeration of proper colorings.

use crate::graph::{mask_vertices, Graph};
use std::collections::BTreeSet;
use thiserror::Error;

/// A vertex coloring over the palette `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    assignment: Vec<u8>,
    k: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("color {color} at vertex {vertex} outside palette 0..{k}")]
    ColorOutOfRange { vertex: usize, color: u8, k: usize },
    #[error("coloring length {length} does not match graph order {order}")]
    LengthMismatch { length: usize, order: usize },
}

impl Coloring {
    /// Wraps an assignment over palette `0..k`, validating every entry.
    pub fn new(assignment: Vec<u8>, k: usize) -> Result<Coloring, ColoringError> {
        if k == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        for (vertex, &color) in assignment.iter().enumerate() {
            if color as usize >= k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
        }
        Ok(Coloring { assignment, k })
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, v: usize) -> u8 {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// True when no edge of `g` is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        debug_assert_eq!(self.assignment.len(), g.order());
        g.edges()
            .iter()
            .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }

    /// Per-color vertex counts, indexed by color.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.k];
        for &color in &self.assignment {
            counts[color as usize] += 1;
        }
        counts
    }

    /// Per-color vertex masks, indexed by color.
    pub fn class_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.k];
        for (v, &color) in self.assignment.iter().enumerate() {
            masks[color as usize] |= 1u64 << v;
        }
        masks
    }

    /// Number of vertices where `self` and `other` assign the same color.
    pub fn agreement(&self, other: &Coloring) -> usize {
        self.assignment
            .iter()
            .zip(&other.assignment)
            .filter(|(a, b)| a == b)
            .count()
    }
}

/// Class-size vector; the profile of a coloring when sorted nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityVector {
    counts: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(counts: Vec<usize>) -> MultiplicityVector {
        MultiplicityVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Palette size the vector spans.
    pub fn palette_size(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_sorted_nonincreasing(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

/// Greedy clique: extend through vertices in nonincreasing degree order.
/// Returns a clique mask; its size lower-bounds the chromatic number.
pub fn greedy_clique(g: &Graph) -> u64 {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique = 0u64;
    for v in order {
        if g.neighbors(v) & clique == clique {
            clique |= 1 << v;
        }
    }
    clique
}

/// Greedy coloring in nonincreasing degree order; the number of colors it
/// spends upper-bounds the chromatic number.
pub fn greedy_coloring_size(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; g.order()];
    let mut used = 0usize;
    for v in order {
        let mut taken = 0u64;
        for u in mask_vertices(g.neighbors(v)) {
            if colors[u] != usize::MAX {
                taken |= 1 << colors[u];
            }
        }
        let color = (!taken).trailing_zeros() as usize;
        colors[v] = color;
        used = used.max(color + 1);
    }
    used
}

/// Decides k-colorability by backtracking. The next vertex is always one of
/// maximum saturation (distinct colors among colored neighbors), with degree
/// then index as tie-breaks; only the first unused color may open a new class.
fn is_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    fn descend(g: &Graph, k: usize, colors: &mut [usize], remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let pick = (0..g.order())
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut neighbor_colors = 0u64;
                for u in mask_vertices(g.neighbors(v)) {
                    if colors[u] != usize::MAX {
                        neighbor_colors |= 1 << colors[u];
                    }
                }
                (
                    neighbor_colors.count_ones(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("remaining > 0");
        let mut taken = 0u64;
        for u in mask_vertices(g.neighbors(pick)) {
            if colors[u] != usize::MAX {
                taken |= 1 << colors[u];
            }
        }
        let used = colors
            .iter()
            .filter(|&&c| c != usize::MAX)
            .fold(0usize, |acc, &c| acc.max(c + 1));
        // Allowing only the next fresh color breaks palette symmetry.
        let cap = k.min(used + 1);
        for color in 0..cap {
            if taken >> color & 1 != 0 {
                continue;
            }
            colors[pick] = color;
            if descend(g, k, colors, remaining - 1) {
                return true;
            }
            colors[pick] = usize::MAX;
        }
        false
    }
    descend(g, k, &mut colors, n)
}

/// Exact chromatic number, by iterative deepening between a greedy-clique
/// lower bound and a greedy-coloring upper bound.
pub fn chromatic_number(g: &Graph) -> usize {
    let lower = greedy_clique(g).count_ones() as usize;
    let upper = greedy_coloring_size(g);
    for k in lower..upper {
        if is_k_colorable(g, k) {
            return k;
        }
    }
    upper
}

// ---------------------------------------------------------------------------
// Constrained enumeration
// ---------------------------------------------------------------------------

/// All proper colorings of `g` over the palette `0..k`, in lexicographic
/// order of the assignment sequence. With `m` present, only colorings whose
/// labeled count vector equals `m` exactly are produced, pruned during the
/// search by per-color budgets. An unsatisfiable constraint yields an empty
/// vector.
pub fn enumerate_proper_colorings(
    g: &Graph,
    k: usize,
    m: Option<&MultiplicityVector>,
) -> Vec<Coloring> {
    assert!(k >= 1, "palette must be nonempty");
    assert!(k <= 64, "palette wider than any graph order in scope");
    if let Some(m) = m {
        assert_eq!(m.palette_size(), k, "multiplicity vector must span the palette");
        if m.total() != g.order() {
            return Vec::new();
        }
    }
    let n = g.order();
    let mut budget: Vec<usize> = match m {
        Some(m) => m.counts().to_vec(),
        None => vec![n; k],
    };
    let mut out = Vec::new();
    let mut assignment = vec![0u8; n];
    descend_colorings(g, k, 0, &mut assignment, &mut budget, &mut out);
    out
}

fn descend_colorings(
    g: &Graph,
    k: usize,
    v: usize,
    assignment: &mut Vec<u8>,
    budget: &mut Vec<usize>,
    out: &mut Vec<Coloring>,
) {
    let n = g.order();
    if v == n {
        out.push(Coloring {
            assignment: assignment.clone(),
            k,
        });
        return;
    }
    // Colors already fixed on earlier neighbors are the only conflicts.
    let mut taken = 0u64;
    for u in mask_vertices(g.neighbors(v) & ((1u64 << v) - 1)) {
        taken |= 1 << assignment[u];
    }
    for color in 0..k {
        if taken >> color & 1 != 0 || budget[color] == 0 {
            continue;
        }
        assignment[v] = color as u8;
        budget[color] -= 1;
        descend_colorings(g, k, v + 1, assignment, budget, out);
        budget[color] += 1;
    }
}

/// All sorted-nonincreasing class-size profiles realized by proper colorings
/// of `g` with exactly `chromatic_number(g)` colors, in ascending order.
///
/// The search walks colorings with colors canonicalized by first occurrence
/// (color `q` may open only after `q-1` has appeared), which visits each
/// unlabeled class partition once instead of up to `k!` times; profiles are
/// deduplicated as they are collected.
pub fn feasible_multiplicities(g: &Graph) -> Vec<MultiplicityVector> {
    let k = chromatic_number(g);
    let n = g.order();
    let mut profiles = BTreeSet::new();
    let mut assignment = vec![0u8; n];
    let mut counts = vec![0usize; k];
    descend_profiles(g, k, 0, &mut assignment, &mut counts, &mut profiles);
    profiles
        .into_iter()
        .map(MultiplicityVector::new)
        .collect()
}

fn descend_profiles(
    g: &Graph,
    k: usize,
    v: usize,
    assignment: &mut Vec<u8>,
    counts: &mut Vec<usize>,
    profiles: &mut BTreeSet<Vec<usize>>,
) {
    if v == g.order() {
        // Palette size k = chi(g) forces every color to appear.
        debug_assert!(counts.iter().all(|&c| c > 0));
        let mut profile = counts.clone();
        profile.sort_unstable_by(|a, b| b.cmp(a));
        profiles.insert(profile);
        return;
    }
    let mut taken = 0u64;
    for u in mask_vertices(g.neighbors(v) & ((1u64 << v) - 1)) {
        taken |= 1 << assignment[u];
    }
    let used = counts.iter().filter(|&&c| c > 0).count();
    for color in 0..k.min(used + 1) {
        if taken >> color & 1 != 0 {
            continue;
        }
        assignment[v] = color as u8;
        counts[color] += 1;
        descend_profiles(g, k, v + 1, assignment, counts, profiles);
        counts[color] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    fn family(text: &str) -> Graph {
        build_family(&text.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&family("empty(5)")), 1);
        assert_eq!(chromatic_number(&family("cycle(5)")), 3);
        assert_eq!(chromatic_number(&family("complete(4)")), 4);
        assert_eq!(chromatic_number(&family("complete_bipartite(3,3)")), 2);
        assert_eq!(chromatic_number(&family("cycle(6)")), 2);
        // Diamond: K_4 minus an edge.
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        assert_eq!(chromatic_number(&diamond), 3);
    }

    #[test]
    fn k3_has_six_proper_colorings() {
        let g = family("complete(3)");
        let all = enumerate_proper_colorings(&g, 3, None);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|c| c.is_proper(&g)));
    }

    #[test]
    fn c4_two_colorings() {
        let g = family("cycle(4)");
        let all = enumerate_proper_colorings(&g, 2, None);
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn p3_with_budget_has_unique_coloring() {
        let g = family("path(3)");
        let m = MultiplicityVector::new(vec![2, 1]);
        let all = enumerate_proper_colorings(&g, 2, Some(&m));
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].assignment(), &[0, 1, 0]);
    }

    #[test]
    fn enumeration_is_lexicographic_and_proper() {
        let g = family("cycle(5)");
        let all = enumerate_proper_colorings(&g, 3, None);
        assert!(all.windows(2).all(|w| w[0].assignment() < w[1].assignment()));
        assert!(all.iter().all(|c| c.is_proper(&g)));
        for c in &all {
            assert_eq!(c.multiplicities().iter().sum::<usize>(), 5);
        }
    }

    #[test]
    fn budget_counts_match_exactly() {
        let g = family("cycle(6)");
        let m = MultiplicityVector::new(vec![3, 3]);
        for c in enumerate_proper_colorings(&g, 2, Some(&m)) {
            assert_eq!(c.multiplicities(), vec![3, 3]);
        }
    }

    #[test]
    fn tree_counts_match_chromatic_polynomial() {
        // P(tree, k) = k (k-1)^(n-1).
        for (spec, n) in [("path(4)", 4), ("star(4)", 5)] {
            let g = family(spec);
            for k in 2..=3usize {
                let count = enumerate_proper_colorings(&g, k, None).len();
                assert_eq!(count, k * (k - 1).pow(n as u32 - 1), "{spec} with k={k}");
            }
        }
        // P(K_n, k) = k falling factorial n.
        let k4 = family("complete(4)");
        assert_eq!(enumerate_proper_colorings(&k4, 4, None).len(), 24);
    }

    #[test]
    fn profiles_match_hand_values() {
        let profile =
            |text: &str| -> Vec<Vec<usize>> {
                feasible_multiplicities(&family(text))
                    .iter()
                    .map(|m| m.counts().to_vec())
                    .collect()
            };
        assert_eq!(profile("path(3)"), vec![vec![2, 1]]);
        assert_eq!(profile("cycle(6)"), vec![vec![3, 3]]);
        assert_eq!(profile("cycle(5)"), vec![vec![2, 2, 1]]);
    }

    #[test]
    fn profiles_are_sorted_and_span_chi() {
        for text in ["cycle(7)", "complete_bipartite(2,4)", "complete(3) + path(3)"] {
            let g = family(text);
            let chi = chromatic_number(&g);
            for m in feasible_multiplicities(&g) {
                assert!(m.is_sorted_nonincreasing());
                assert_eq!(m.total(), g.order());
                assert_eq!(m.palette_size(), chi);
                assert!(m.counts().iter().all(|&c| c >= 1));
            }
        }
    }
}
