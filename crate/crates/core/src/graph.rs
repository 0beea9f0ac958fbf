//! Simple undirected graphs over dense vertex ids with bitset adjacency.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
}

/// An immutable simple graph on vertices `0..n`.
///
/// Adjacency rows are bitsets; the representation is symmetric and
/// irreflexive by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    /// Builds a graph from adjacency rows that are already symmetric and
    /// irreflexive.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let twice: usize = adj.iter().map(VertexSet::len).sum();
        let g = Graph {
            adj,
            edge_count: twice / 2,
        };
        debug_assert!(
            g.check_invariants(),
            "adjacency rows are not a simple graph"
        );
        g
    }

    /// Labeled graph whose edges are the set bits of `mask`, with bit `b`
    /// standing for the `b`-th pair in lexicographic order
    /// `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut adj = vec![VertexSet::new(n); n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                bit += 1;
            }
        }
        Self::from_rows(adj)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            self.adj[u].capacity() == n
                && !self.adj[u].contains(u)
                && self.adj[u].iter().all(|v| v < n && self.adj[v].contains(u))
        })
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].intersection_len(s))
            .sum::<usize>()
            / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Breadth-first layers from `root`.
    pub fn bfs_levels(&self, root: usize) -> Result<LevelDecomposition, GraphError> {
        self.check_vertex(root)?;
        let mut seen = VertexSet::new(self.n());
        seen.insert(root);
        let mut frontier = seen.clone();
        let mut levels = Vec::new();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            levels.push(std::mem::replace(&mut frontier, next));
        }
        let unreached = self.vertices().difference(&seen);
        Ok(LevelDecomposition {
            root,
            levels,
            unreached,
        })
    }

    /// Breadth-first layers of `G[within]` from `root`, as host ids.
    pub fn bfs_levels_within(&self, root: usize, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n());
        seen.insert(root);
        let mut frontier = seen.clone();
        let mut levels = Vec::new();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            levels.push(std::mem::replace(&mut frontier, next));
        }
        levels
    }

    /// The component of `start` inside `G[within]`.
    pub fn component_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.n());
        comp.insert(start);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    /// Components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut rest = within.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_within(v, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component_within(0, &self.vertices()).len() == self.n()
    }

    /// True when `G - s` has at least two components.
    pub fn separates(&self, s: &VertexSet) -> bool {
        let rest = self.vertices().difference(s);
        match rest.first() {
            None => false,
            Some(v) => self.component_within(v, &rest).len() < rest.len(),
        }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        if let Some(bad) = s.iter().find(|&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n(),
            });
        }
        Ok(self.induced(s))
    }

    /// Induced subgraph on `s`; ids are renumbered in ascending order.
    pub(crate) fn induced(&self, s: &VertexSet) -> InducedSubgraph {
        let original = s.to_vec();
        let k = original.len();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                VertexSet::from_iter_with_capacity(
                    k,
                    self.adj[v]
                        .iter()
                        .filter(|w| s.contains(*w))
                        .map(|w| local[w]),
                )
            })
            .collect();
        InducedSubgraph {
            graph: Graph::from_rows(adj),
            original,
        }
    }

    /// `G - s`.
    pub fn without(&self, s: &VertexSet) -> InducedSubgraph {
        self.induced(&self.vertices().difference(s))
    }

    pub fn without_vertex(&self, v: usize) -> InducedSubgraph {
        let mut s = self.vertices();
        s.remove(v);
        self.induced(&s)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// An induced subgraph together with the translation back to host ids.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the host id of local vertex `i`; strictly ascending.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Local id of host vertex `v`, if it was kept.
    pub fn to_local(&self, v: usize) -> Option<usize> {
        self.original.binary_search(&v).ok()
    }

    pub fn lift(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn lift_set(&self, local: &VertexSet, host_n: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(host_n, local.iter().map(|v| self.original[v]))
    }
}

/// BFS layers `S_0 = {root}, S_1, ..` plus the vertices of other components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelDecomposition {
    pub root: usize,
    pub levels: Vec<VertexSet>,
    pub unreached: VertexSet,
}

impl LevelDecomposition {
    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(v))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(VertexSet::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(1, 0) && !p3.has_edge(0, 2));

        let k4 = complete(4);
        assert_eq!(k4.edge_count(), 6);

        let c5 = cycle(5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::Loop(1))
        );
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(cycle(6).bfs_levels(2).unwrap().sizes(), vec![1, 2, 2, 1]);

        let k4 = complete(4).bfs_levels(0).unwrap();
        assert_eq!(k4.levels[0].to_vec(), vec![0]);
        assert_eq!(k4.levels[1].to_vec(), vec![1, 2, 3]);

        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let d = two_edges.bfs_levels(0).unwrap();
        assert_eq!(d.levels.len(), 2);
        assert_eq!(d.levels[1].to_vec(), vec![1]);
        assert_eq!(d.unreached.to_vec(), vec![2, 3]);

        assert!(cycle(3).bfs_levels(3).is_err());
    }

    #[test]
    fn induced_examples() {
        let k4 = complete(4);
        let t = k4
            .induced_subgraph(&VertexSet::from_iter_with_capacity(4, [0, 2, 3]))
            .unwrap();
        assert_eq!(t.graph.edge_count(), 3);
        assert_eq!(t.original, vec![0, 2, 3]);
        assert_eq!(t.to_local(2), Some(1));
        assert_eq!(t.to_local(1), None);

        let c5 = cycle(5);
        let p = c5
            .induced_subgraph(&VertexSet::from_iter_with_capacity(5, [0, 1, 2]))
            .unwrap();
        assert_eq!(p.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let e = c5.induced_subgraph(&VertexSet::new(5)).unwrap();
        assert_eq!(e.graph.n(), 0);

        assert!(c5
            .induced_subgraph(&VertexSet::from_iter_with_capacity(9, [7]))
            .is_err());
    }

    #[test]
    fn component_examples() {
        assert_eq!(cycle(5).connected_components().len(), 1);
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = two_triangles.connected_components();
        assert_eq!(
            comps.iter().map(VertexSet::len).collect::<Vec<_>>(),
            vec![3, 3]
        );
        assert_eq!(comps[1].first(), Some(3));
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn edge_mask_order_is_lexicographic() {
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        let g = Graph::from_edge_mask(3, 0b100);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }
}
