//! Clique cutsets, complete multipartite recognition, the cutset /
//! tripartite / diamond-free trichotomy, and minimal triangle hitting sets.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::detectors::{find_induced_pattern, find_triangle_within, PatternName};
use crate::falsification::{FalsificationReport, TheoremId, Witness};
use crate::graph::{Graph, InducedSubgraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecomposeError {
    #[error("graph is disconnected; the empty set already separates it")]
    Disconnected,
    #[error("vertex set is not a clique")]
    NotClique,
    #[error("removing the vertex set does not disconnect the graph")]
    DoesNotSeparate,
    #[error("falsification: {0}")]
    Falsified(Box<FalsificationReport>),
}

/// A clique whose removal disconnects `g`, smallest first; within a size,
/// the lexicographically first one.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<VertexSet>, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    find_clique_cutset_within(g, &g.vertices())
}

/// Like [`find_clique_cutset`] for `G[within]`, which must be connected.
pub(crate) fn find_clique_cutset_within(
    g: &Graph,
    within: &VertexSet,
) -> Result<Option<VertexSet>, DecomposeError> {
    if within.len() < 3 {
        return Ok(None);
    }
    let verts = within.to_vec();
    let mut current = Vec::new();
    for size in 1..within.len() - 1 {
        let mut found = None;
        let mut any = false;
        cliques_of_size(g, &verts, 0, size, &mut current, &mut |clique| {
            any = true;
            let s = VertexSet::from_iter_with_capacity(g.n(), clique.iter().copied());
            let rest = within.difference(&s);
            let start = rest.first().expect("rest nonempty");
            if g.component_within(start, &rest).len() < rest.len() {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return Ok(found);
        }
        if !any {
            break;
        }
    }
    Ok(None)
}

/// Calls `visit` on each clique of exactly `size` vertices drawn from
/// `verts[from..]`, in lexicographic order; stops when `visit` returns true.
fn cliques_of_size(
    g: &Graph,
    verts: &[usize],
    from: usize,
    size: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if current.len() == size {
        return visit(current);
    }
    for i in from..verts.len() {
        if verts.len() - i < size - current.len() {
            break;
        }
        let v = verts[i];
        if current.iter().all(|&u| g.has_edge(u, v)) {
            current.push(v);
            let stop = cliques_of_size(g, verts, i + 1, size, current, visit);
            current.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

/// The two sides of a clique cutset: `first` is the component of `G - S`
/// holding the smallest vertex, plus `S`; `second` is everything else plus `S`.
#[derive(Clone, Debug)]
pub struct CutsetSplit {
    pub first: InducedSubgraph,
    pub second: InducedSubgraph,
}

pub fn split_on_clique_cutset(g: &Graph, s: &VertexSet) -> Result<CutsetSplit, DecomposeError> {
    let (a, b) = split_sets(g, &g.vertices(), s)?;
    Ok(CutsetSplit {
        first: g.induced(&a),
        second: g.induced(&b),
    })
}

/// Vertex sets of the two sides of `G[within]` split on `s`.
pub(crate) fn split_sets(
    g: &Graph,
    within: &VertexSet,
    s: &VertexSet,
) -> Result<(VertexSet, VertexSet), DecomposeError> {
    if !g.is_clique(s) {
        return Err(DecomposeError::NotClique);
    }
    let rest = within.difference(s);
    let Some(start) = rest.first() else {
        return Err(DecomposeError::DoesNotSeparate);
    };
    let comp = g.component_within(start, &rest);
    if comp.len() == rest.len() {
        return Err(DecomposeError::DoesNotSeparate);
    }
    let second = rest.difference(&comp).union(s);
    Ok((comp.union(s), second))
}

/// Parts of a complete multipartite structure, sorted by size then smallest
/// member, or `None`.
pub fn recognize_complete_multipartite(g: &Graph) -> Option<Vec<VertexSet>> {
    let all = g.vertices();
    let mut parts: Vec<VertexSet> = Vec::new();
    let mut rest = all.clone();
    while let Some(v) = rest.first() {
        let part = all.difference(g.neighbors(v));
        if part.iter().any(|u| all.difference(g.neighbors(u)) != part) {
            return None;
        }
        rest.difference_with(&part);
        parts.push(part);
    }
    parts.sort_by_key(|p| (p.len(), p.first()));
    Some(parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum Trichotomy {
    /// An empty cutset marks a disconnected graph.
    CliqueCutset {
        cutset: VertexSet,
    },
    CompleteTripartite {
        parts: Vec<VertexSet>,
    },
    DiamondFree,
}

impl Trichotomy {
    /// Re-checks the claim against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Trichotomy::CliqueCutset { cutset } => {
                cutset.iter().all(|v| v < g.n()) && g.is_clique(cutset) && g.separates(cutset)
            }
            Trichotomy::CompleteTripartite { parts } => {
                if parts.len() != 3 {
                    return false;
                }
                let mut union = VertexSet::new(g.n());
                let mut total = 0;
                for p in parts {
                    if p.is_empty() || !g.is_stable(p) {
                        return false;
                    }
                    union.union_with(p);
                    total += p.len();
                }
                let complete = (0..3).all(|i| {
                    (i + 1..3).all(|j| parts[i].iter().all(|u| parts[j].is_subset(g.neighbors(u))))
                });
                total == g.n() && union.len() == g.n() && complete
            }
            Trichotomy::DiamondFree => find_induced_pattern(g, PatternName::Diamond).is_none(),
        }
    }
}

/// Classifies an (X-cycle, V-cycle)-free graph. Applies in the order clique
/// cutset, complete tripartite, diamond-free; a graph fitting none of them
/// contradicts the trichotomy and comes back as a falsification carrying the
/// induced diamond.
pub fn trichotomy(g: &Graph) -> Result<Trichotomy, DecomposeError> {
    match find_clique_cutset(g) {
        Err(DecomposeError::Disconnected) => {
            return Ok(Trichotomy::CliqueCutset {
                cutset: VertexSet::new(g.n()),
            });
        }
        Err(e) => return Err(e),
        Ok(Some(cutset)) => return Ok(Trichotomy::CliqueCutset { cutset }),
        Ok(None) => {}
    }
    if let Some(parts) = recognize_complete_multipartite(g) {
        if parts.len() == 3 {
            return Ok(Trichotomy::CompleteTripartite { parts });
        }
    }
    match find_induced_pattern(g, PatternName::Diamond) {
        None => Ok(Trichotomy::DiamondFree),
        Some(embedding) => Err(DecomposeError::Falsified(Box::new(
            FalsificationReport::new(
                TheoremId::NoDiamond,
                g,
                Witness::InducedDiamond {
                    scope: (0..g.n()).collect(),
                    embedding,
                },
            ),
        ))),
    }
}

/// An inclusion-minimal vertex set meeting every triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSet {
    pub vertices: VertexSet,
}

impl HittingSet {
    /// `G - T` is triangle-free and no member of `T` can be dropped.
    pub fn verify(&self, g: &Graph) -> bool {
        self.verify_within(g, &g.vertices())
    }

    pub(crate) fn verify_within(&self, g: &Graph, within: &VertexSet) -> bool {
        if !self.vertices.is_subset(within) {
            return false;
        }
        let outside = within.difference(&self.vertices);
        if find_triangle_within(g, &outside).is_some() {
            return false;
        }
        self.vertices.iter().all(|t| {
            let mut back = outside.clone();
            back.insert(t);
            find_triangle_within(g, &back).is_some()
        })
    }
}

pub fn minimal_triangle_hitting_set(g: &Graph) -> HittingSet {
    minimal_triangle_hitting_set_within(g, &g.vertices())
}

/// Greedy: take the smallest vertex of the lexicographically first remaining
/// triangle until none is left, then drop redundant members in ascending
/// order until nothing changes.
pub(crate) fn minimal_triangle_hitting_set_within(g: &Graph, within: &VertexSet) -> HittingSet {
    let mut t = VertexSet::new(g.n());
    let mut rest = within.clone();
    while let Some([u, _, _]) = find_triangle_within(g, &rest) {
        t.insert(u);
        rest.remove(u);
    }
    loop {
        let mut changed = false;
        for v in t.clone().iter() {
            let mut back = rest.clone();
            back.insert(v);
            if find_triangle_within(g, &back).is_none() {
                t.remove(v);
                rest = back;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    HittingSet { vertices: t }
}
