//! Bitmask-adjacency graph representation for orders up to 64.

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold; one adjacency row fits a machine word.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be positive")]
    ZeroOrder,
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Returns a mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An undirected simple graph on vertices `0..n`, with per-vertex neighbor bitmasks.
///
/// Values are immutable once constructed; adjacency is symmetric, loop-free, and
/// never has bits at or above index `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an explicit edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Reconstructs a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mask = low_bits(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 != 0 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                let uv = adj[u] >> v & 1;
                let vu = adj[v] >> u & 1;
                if uv != vu {
                    // Symmetrize silently would hide caller bugs; report the lower endpoint.
                    return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_bits(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&row| row == 0)
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]` in the result.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = self.adj[v];
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                adj[perm[v]] |= 1u64 << perm[u];
                row &= row - 1;
            }
        }
        Graph { n: self.n, adj }
    }

    /// Extends the graph with one new vertex whose neighborhood is `neighborhood`
    /// (a bitmask over the existing vertices).
    pub fn with_appended_vertex(&self, neighborhood: u64) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        if neighborhood & !low_bits(self.n) != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: 63 - neighborhood.leading_zeros() as usize,
                order: self.n,
            });
        }
        let mut adj = self.adj.clone();
        adj.push(neighborhood);
        let new_bit = 1u64 << self.n;
        let mut rest = neighborhood;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            adj[u] |= new_bit;
            rest &= rest - 1;
        }
        Ok(Graph { n, adj })
    }

    /// Disjoint union, labeling `other`'s vertices after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// First triangle in lexicographic vertex order, if any.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in 0..self.n {
            let mut above_u = self.adj[u] & !low_bits(u + 1);
            while above_u != 0 {
                let v = above_u.trailing_zeros() as usize;
                above_u &= above_u - 1;
                let common = self.adj[u] & self.adj[v] & !low_bits(v + 1);
                if common != 0 {
                    let w = common.trailing_zeros() as usize;
                    return Some([u, v, w]);
                }
            }
        }
        None
    }

    /// Vertices of the induced subgraph on `V \ {v}` are relabeled to `0..n-1`
    /// preserving order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(self.n > 1, "cannot delete the only vertex");
        let keep_low = low_bits(v);
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u];
            adj.push((row & keep_low) | ((row >> (v + 1)) << v));
        }
        Graph {
            n: self.n - 1,
            adj,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterates the vertices of a bitmask in ascending order.
pub fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_symmetric_adjacency() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 1), (3, 0)]).unwrap();
        assert!(g.has_edge(1, 0));
        assert!(g.has_edge(1, 2));
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::empty(0).unwrap_err(), GraphError::ZeroOrder);
        assert_eq!(Graph::empty(65).unwrap_err(), GraphError::OrderTooLarge(65));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, order: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, &[(2, 2)]).unwrap_err(),
            GraphError::SelfLoop(2)
        );
    }

    #[test]
    fn order_64_round_trips() {
        let edges: Vec<(usize, usize)> = (0..63).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(64, &edges).unwrap();
        assert_eq!(g.edge_count(), 63);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(30), 2);
    }

    #[test]
    fn relabel_permutes_edges() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let h = g.relabel(&[2, 0, 1]);
        assert!(h.has_edge(2, 0));
        assert!(!h.has_edge(0, 1));
    }

    #[test]
    fn delete_vertex_relabels_order_preserving() {
        // paw: triangle 0-1-2 plus pendant 3 on vertex 2
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let h = g.delete_vertex(3);
        assert!(h.is_complete());
        let h2 = g.delete_vertex(0);
        assert_eq!(h2.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn triangle_search_finds_lexicographic_first() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (0, 4)]).unwrap();
        assert_eq!(g.find_triangle(), Some([1, 2, 3]));
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(h.find_triangle(), None);
    }

    #[test]
    fn disjoint_union_blocks() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = k3.disjoint_union(&k2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
    }
}
