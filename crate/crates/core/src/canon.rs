//! Canonical forms: the lexicographically smallest upper-triangle adjacency
//! bit sequence over all vertex relabelings.
//!
//! The sequence reads column-major, `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! exactly the graph6 bit order, and is packed MSB-first into a `u64` (orders
//! up to 10 need at most 45 bits). Two graphs have equal forms iff they are
//! isomorphic, because the minimum ranges over all `n!` relabelings.
//!
//! The search labels vertices one position at a time: placing a vertex at
//! position `k` appends its adjacency column against positions `0..k` to the
//! bit prefix. Candidates at each position are tried in ascending column
//! order, and a branch is cut as soon as its prefix exceeds the corresponding
//! prefix of the best complete labeling found so far. This is exact; the
//! ordering only makes the first descent land near the minimum so the cut
//! fires early. Highly symmetric graphs can still cost `n!`, which is the
//! documented complexity wall behind the order-10 cap.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order `canonical_form` accepts.
pub const MAX_CANON_ORDER: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonicalization supports orders up to {MAX_CANON_ORDER}, found {0}")]
    OrderTooLarge(usize),
}

/// Opaque comparable canonical form. Ordering compares the order first, then
/// the packed bit sequence, so sorting groups graphs by order and then by the
/// lexicographic bit order the search minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    /// Graph order the form describes.
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Rebuilds the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut adj = vec![0u64; n];
        let mut index = 0usize;
        for v in 1..n {
            for u in 0..v {
                if self.bits >> (63 - index) & 1 != 0 {
                    adj[u] |= 1u64 << v;
                    adj[v] |= 1u64 << u;
                }
                index += 1;
            }
        }
        Graph::from_adjacency(adj).expect("canonical bits describe a simple graph")
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// `order[k]` = original vertex placed at position `k`.
    order: Vec<usize>,
    /// Position of each placed original vertex, for the winning permutation.
    best_order: Vec<usize>,
    /// Best complete left-aligned bit value found so far.
    best: u64,
}

impl Search<'_> {
    /// Recurses from position `len = order.len()` with `prefix` holding
    /// `prefix_bits` decided bits (left-aligned).
    fn descend(&mut self, prefix: u64, prefix_bits: u32, used: u64) {
        let pos = self.order.len();
        if pos == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        // Column of candidate `v` against the already-placed vertices, as an
        // integer with the position-0 comparison in the high bit.
        let mut candidates: Vec<(u64, usize)> = Vec::with_capacity(self.n - pos);
        for v in 0..self.n {
            if used >> v & 1 != 0 {
                continue;
            }
            let mut column = 0u64;
            for (i, &placed) in self.order.iter().enumerate() {
                if self.g.has_edge(placed, v) {
                    column |= 1 << (pos - 1 - i);
                }
            }
            candidates.push((column, v));
        }
        candidates.sort_unstable();
        for (column, v) in candidates {
            let new_bits = prefix_bits + pos as u32;
            let new_prefix = if pos == 0 {
                prefix
            } else {
                prefix | column << (64 - new_bits)
            };
            // Candidates are ascending, so once one prefix exceeds the best's
            // prefix every later one does too.
            if new_bits > 0 && new_prefix > self.best & prefix_mask(new_bits) {
                break;
            }
            self.order.push(v);
            self.descend(new_prefix, new_bits, used | 1 << v);
            self.order.pop();
        }
    }
}

/// Top `bits` bits set.
#[inline]
fn prefix_mask(bits: u32) -> u64 {
    if bits == 0 {
        0
    } else {
        !0u64 << (64 - bits)
    }
}

/// Canonical form of `g`, minimized over all relabelings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_search(g).map(|(form, _)| form)
}

/// A relabeling `perm` (old label -> new label) such that
/// `g.relabel(&perm)` is the canonical representative.
pub fn canonical_relabeling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    canonical_search(g).map(|(_, perm)| perm)
}

fn canonical_search(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderTooLarge(n));
    }
    let mut search = Search {
        g,
        n,
        order: Vec::with_capacity(n),
        best_order: (0..n).collect(),
        best: u64::MAX,
    };
    search.descend(0, 0, 0);
    let mut perm = vec![0usize; n];
    for (position, &original) in search.best_order.iter().enumerate() {
        perm[original] = position;
    }
    let form = CanonicalForm {
        n: n as u8,
        bits: search.best,
    };
    Ok((form, perm))
}
