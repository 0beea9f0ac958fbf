//! Maximum clique by branch and bound with a greedy-coloring bound.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// `(ω(g), a maximum clique)`. The witness is the first maximum clique met
/// by the deterministic search order.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    max_clique_within(g, &g.vertices())
}

/// Maximum clique of `G[within]`, as host ids.
pub fn max_clique_within(g: &Graph, within: &VertexSet) -> (usize, VertexSet) {
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    if !within.is_empty() {
        search.expand(within.clone());
    }
    let set = VertexSet::from_iter_with_capacity(g.n(), search.best.iter().copied());
    (search.best.len(), set)
}

struct Search<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: VertexSet) {
        let (order, bounds) = color_sort(self.g, &candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = candidates.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Greedy color classes over `p`; returns vertices ordered by class with the
/// class index (1-based) of each, which bounds the clique size among the
/// vertices up to that position.
fn color_sort(g: &Graph, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}
