//! Immutable simple graphs over `0..n` with bitset adjacency rows.

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_ORDER};

/// A finite simple graph on the vertices `0..n`, `n <= 64`.
///
/// `adj[v]` is the open neighborhood of `v`. Adjacency is symmetric and
/// irreflexive; every constructor upholds this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph `n K_1`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u != v {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, symmetrizing and dropping loops.
    pub(crate) fn from_rows(n: usize, rows: Vec<VertexSet>) -> Self {
        debug_assert_eq!(rows.len(), n);
        let mut adj = rows;
        let full = VertexSet::full(n);
        for (v, row) in adj.iter_mut().enumerate() {
            *row = row.intersection(full).without(v);
        }
        for u in 0..n {
            for v in adj[u] {
                adj[v].insert(u);
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// `self ∪ other` with `other` relabeled by `+self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    /// `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let left = self.vertices();
        let right = other.vertices().shifted(self.n);
        let mut adj = Vec::with_capacity(n);
        for v in 0..self.n {
            adj.push(if cross {
                self.adj[v].union(right)
            } else {
                self.adj[v]
            });
        }
        for v in 0..other.n {
            let row = other.adj[v].shifted(self.n);
            adj.push(if cross { row.union(left) } else { row });
        }
        Ok(Graph { n, adj })
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their lowest vertex.
    pub fn components_of(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(seed) = rest.first() {
            let comp = self.reach(seed, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `seed` inside `within`.
    pub fn reach(&self, seed: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(seed);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(self.vertices())
    }

    /// True iff the graph has exactly one component (so `K_0` is not
    /// connected).
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertices()) == self.vertices()
    }

    /// True iff `G[within]` is connected; the empty set counts as connected.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(seed) => self.reach(seed, within) == within,
        }
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in increasing
    /// vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let s = s.intersection(self.vertices());
        let keep = s.to_vec();
        let adj = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u].contains(v))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Graph { n: keep.len(), adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, empty, path};

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(complete(4).unwrap().complement(), empty(4).unwrap());
    }

    #[test]
    fn c5_is_self_complementary_under_doubling() {
        let c5 = cycle(5).unwrap();
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.degrees().iter().all(|&d| d == 2));
        // i -> 2i mod 5 maps C5 onto its complement
        let perm: Vec<usize> = (0..5).map(|i| (2 * i) % 5).collect();
        assert_eq!(c5.permuted(&perm), comp);
    }

    #[test]
    fn join_of_two_independent_pairs_is_c4() {
        let g = empty(2).unwrap().join(&empty(2).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn components_and_induced() {
        let g = complete(2)
            .unwrap()
            .disjoint_union(&complete(3).unwrap())
            .unwrap();
        assert_eq!(
            g.components(),
            vec![VertexSet::from([0, 1]), VertexSet::from([2, 3, 4])]
        );
        assert!(!g.is_connected());
        let p3 = cycle(5)
            .unwrap()
            .induced_subgraph(VertexSet::from([0, 1, 2]));
        assert_eq!(p3, path(3).unwrap());
        assert!(!Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn order_cap_enforced() {
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
        let big = empty(40).unwrap();
        assert_eq!(big.join(&big), Err(GraphError::OrderTooLarge(80)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
    }
}
