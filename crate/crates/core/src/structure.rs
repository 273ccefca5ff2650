//! Structural analysis: components, bipartitions, degree sequences, and
//! exact maximum matching.

use crate::graph::{mask_vertices, Graph};
use std::collections::VecDeque;

/// Structural facts about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Connected components as vertex masks, ordered by smallest vertex.
    pub components: Vec<u64>,
    /// `(x, y)` vertex masks when the graph is bipartite, with `|x| <= |y|`;
    /// see [`bipartition`] for the tie-break convention.
    pub bipartition: Option<(u64, u64)>,
    /// Degrees in nonincreasing order.
    pub degree_sequence: Vec<usize>,
    /// Number of degree-0 vertices.
    pub isolated_count: usize,
    /// Size of a maximum matching.
    pub matching_size: usize,
}

impl StructureReport {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// Computes the full [`StructureReport`] for `g`.
pub fn analyze_structure(g: &Graph) -> StructureReport {
    let degree_sequence = {
        let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    };
    StructureReport {
        components: components(g),
        bipartition: bipartition(g),
        isolated_count: (0..g.order()).filter(|&v| g.degree(v) == 0).count(),
        matching_size: maximum_matching_size(g),
        degree_sequence,
    }
}

/// Connected components as vertex masks, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..g.order() {
        if seen >> start & 1 != 0 {
            continue;
        }
        let mut component = 1u64 << start;
        let mut frontier = 1u64 << start;
        while frontier != 0 {
            let mut next = 0u64;
            for v in mask_vertices(frontier) {
                next |= g.neighbors(v);
            }
            frontier = next & !component;
            component |= frontier;
        }
        seen |= component;
        out.push(component);
    }
    out
}

/// Bipartition `(x, y)` with `|x| <= |y|`, or `None` when an odd cycle exists.
///
/// Convention: each component contributes its smaller side to `x`; when a
/// component's sides tie, the side containing the component's smallest vertex
/// goes to `x`. This minimizes `|x|` over all valid bipartitions and is
/// deterministic. On a connected graph it reduces to the usual smaller-side
/// choice, which is the quantity the bipartite villainy formulas consume.
pub fn bipartition(g: &Graph) -> Option<(u64, u64)> {
    let mut color = vec![None::<bool>; g.order()];
    let mut x = 0u64;
    let mut y = 0u64;
    for component in components(g) {
        let start = component.trailing_zeros() as usize;
        let mut queue = VecDeque::from([start]);
        color[start] = Some(false);
        let mut side0 = 1u64 << start;
        let mut side1 = 0u64;
        while let Some(v) = queue.pop_front() {
            let v_color = color[v].expect("queued vertices are colored");
            for u in mask_vertices(g.neighbors(v)) {
                match color[u] {
                    None => {
                        color[u] = Some(!v_color);
                        if v_color {
                            side0 |= 1u64 << u;
                        } else {
                            side1 |= 1u64 << u;
                        }
                        queue.push_back(u);
                    }
                    Some(u_color) if u_color == v_color => return None,
                    Some(_) => {}
                }
            }
        }
        // side0 holds the component's smallest vertex; it wins ties.
        if side1.count_ones() < side0.count_ones() {
            x |= side1;
            y |= side0;
        } else {
            x |= side0;
            y |= side1;
        }
    }
    Some((x, y))
}

// ---------------------------------------------------------------------------
// Maximum matching (blossom algorithm)
// ---------------------------------------------------------------------------

struct Blossom<'a> {
    g: &'a Graph,
    n: usize,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom<'_> {
    /// Lowest common ancestor of the tree paths from `a` and `b`, measured in
    /// blossom bases.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut visited = vec![false; self.n];
        loop {
            a = self.base[a];
            visited[a] = true;
            match self.mate[a].and_then(|m| self.parent[m]) {
                Some(next) => a = next,
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if visited[b] {
                return b;
            }
            b = self.parent[self.mate[b].expect("non-root tree vertex is matched")]
                .expect("matched tree vertex has a parent");
        }
    }

    /// Marks blossom membership along the tree path from `v` down to base `b`,
    /// rethreading parent pointers through `child`.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path vertices are matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path continues to the base");
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex ending
    /// an augmenting path, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.parent.iter_mut().for_each(|p| *p = None);
        self.in_tree.iter_mut().for_each(|t| *t = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in mask_vertices(self.g.neighbors(v)) {
                if self.base[v] == self.base[u] || self.mate[v] == Some(u) {
                    continue;
                }
                let u_is_even =
                    u == root || self.mate[u].is_some_and(|m| self.parent[m].is_some());
                if u_is_even {
                    // Even-even edge closes an odd cycle: contract the blossom.
                    let new_base = self.lca(v, u);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, new_base, u);
                    self.mark_path(u, new_base, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = new_base;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[u].is_none() {
                    self.parent[u] = Some(v);
                    match self.mate[u] {
                        None => return Some(u),
                        Some(m) => {
                            self.in_tree[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    /// Flips matched edges along the augmenting path ending at `finish`.
    fn augment(&mut self, finish: usize) {
        let mut v = Some(finish);
        while let Some(x) = v {
            let pv = self.parent[x].expect("augmenting path vertices have parents");
            let next = self.mate[pv];
            self.mate[x] = Some(pv);
            self.mate[pv] = Some(x);
            v = next;
        }
    }
}

/// Exact maximum matching size, valid for any graph within [`Graph`] bounds.
pub fn maximum_matching_size(g: &Graph) -> usize {
    let n = g.order();
    let mut state = Blossom {
        g,
        n,
        mate: vec![None; n],
        parent: vec![None; n],
        base: (0..n).collect(),
        in_tree: vec![false; n],
        in_blossom: vec![false; n],
    };
    // Greedy seed matching cuts down the number of augmentation phases.
    for v in 0..n {
        if state.mate[v].is_none() {
            if let Some(u) =
                mask_vertices(g.neighbors(v)).find(|&u| state.mate[u].is_none())
            {
                state.mate[v] = Some(u);
                state.mate[u] = Some(v);
            }
        }
    }
    for v in 0..n {
        if state.mate[v].is_none() {
            if let Some(finish) = state.find_path(v) {
                state.augment(finish);
            }
        }
    }
    state.mate.iter().flatten().count() / 2
}
