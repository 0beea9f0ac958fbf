//! Induced copies of the small fixed patterns: triangle, K4, diamond,
//! dragonfly, butterfly and complete tripartite graphs.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Dragonfly on `x1..x7` (ids 0..6).
pub const DRAGONFLY_EDGES: [(usize, usize); 9] = [
    (0, 1), // x1x2
    (1, 2), // x2x3
    (2, 3), // x3x4
    (4, 0), // x5x1
    (4, 1), // x5x2
    (5, 1), // x6x2
    (5, 2), // x6x3
    (6, 2), // x7x3
    (6, 3), // x7x4
];

/// Butterfly on `y1..y5` (ids 0..4).
pub const BUTTERFLY_EDGES: [(usize, usize); 7] = [
    (0, 1), // y1y2
    (1, 2), // y2y3
    (2, 4), // y3y5
    (3, 0), // y4y1
    (4, 1), // y5y2
    (3, 1), // y4y2
    (3, 4), // y4y5
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternName {
    Triangle,
    K4,
    /// `K_{1,1,2}`.
    Diamond,
    Dragonfly,
    Butterfly,
    CompleteTripartite(usize, usize, usize),
}

impl PatternName {
    pub fn graph(self) -> Graph {
        match self {
            PatternName::Triangle => Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            PatternName::K4 => {
                Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
            }
            // 4-cycle 0-1-2-3 plus the chord 0-2
            PatternName::Diamond => {
                Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
            }
            PatternName::Dragonfly => Graph::from_edge_list(7, &DRAGONFLY_EDGES).unwrap(),
            PatternName::Butterfly => Graph::from_edge_list(5, &BUTTERFLY_EDGES).unwrap(),
            PatternName::CompleteTripartite(a, b, c) => {
                crate::generators::complete_multipartite(&[a.max(1), b.max(1), c.max(1)]).unwrap()
            }
        }
    }
}

impl std::str::FromStr for PatternName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "triangle" | "k3" => return Ok(PatternName::Triangle),
            "k4" => return Ok(PatternName::K4),
            "diamond" => return Ok(PatternName::Diamond),
            "dragonfly" => return Ok(PatternName::Dragonfly),
            "butterfly" => return Ok(PatternName::Butterfly),
            _ => {}
        }
        // "k1,2,2" or "tripartite:1,2,2"
        let body = lower
            .strip_prefix("tripartite:")
            .or_else(|| lower.strip_prefix('k'))
            .ok_or_else(|| format!("unknown pattern `{s}`"))?;
        let parts: Vec<usize> = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| format!("unknown pattern `{s}`"))?;
        match parts.as_slice() {
            &[a, b, c] if a > 0 && b > 0 && c > 0 => Ok(PatternName::CompleteTripartite(a, b, c)),
            _ => Err(format!("unknown pattern `{s}`")),
        }
    }
}

/// An induced copy of pattern `p` in `g`, as the image of each pattern
/// vertex. The search is a degree-sequence prefilter followed by
/// backtracking over pattern vertices in connectivity order.
pub fn find_induced_pattern(g: &Graph, p: PatternName) -> Option<Vec<usize>> {
    find_induced_copy(g, &p.graph())
}

pub fn find_induced_copy(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    let mut pdeg: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();
    let mut gdeg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    pdeg.sort_unstable_by(|a, b| b.cmp(a));
    gdeg.sort_unstable_by(|a, b| b.cmp(a));
    if pdeg.iter().zip(&gdeg).any(|(p, h)| p > h) {
        return None;
    }

    let order = connectivity_order(pattern);
    let by_degree: Vec<VertexSet> = (0..=pattern.max_degree())
        .map(|d| {
            VertexSet::from_iter_with_capacity(g.n(), (0..g.n()).filter(|&v| g.degree(v) >= d))
        })
        .collect();
    let mut image = vec![usize::MAX; k];
    let mut used = VertexSet::new(g.n());
    if extend(g, pattern, &order, &by_degree, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn connectivity_order(p: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(p.n());
    let mut placed = VertexSet::new(p.n());
    while order.len() < p.n() {
        // prefer vertices attached to what is already placed, then high degree
        let next = (0..p.n())
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    p.neighbors(v).intersection_len(&placed),
                    p.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

fn extend(
    g: &Graph,
    p: &Graph,
    order: &[usize],
    by_degree: &[VertexSet],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let mut cand = by_degree[p.degree(pv)].difference(used);
    for &prev in &order[..depth] {
        let host = image[prev];
        if p.has_edge(pv, prev) {
            cand.intersect_with(g.neighbors(host));
        } else {
            cand.difference_with(g.neighbors(host));
        }
    }
    for v in cand.iter() {
        image[pv] = v;
        used.insert(v);
        if extend(g, p, order, by_degree, depth + 1, image, used) {
            return true;
        }
        used.remove(v);
    }
    image[pv] = usize::MAX;
    false
}

/// True when `embedding` maps `pattern` injectively onto an induced copy in `g`.
pub fn is_induced_embedding(g: &Graph, pattern: &Graph, embedding: &[usize]) -> bool {
    if embedding.len() != pattern.n() || embedding.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from_iter_with_capacity(g.n(), embedding.iter().copied());
    if set.len() != embedding.len() {
        return false;
    }
    (0..pattern.n()).all(|a| {
        (a + 1..pattern.n())
            .all(|b| pattern.has_edge(a, b) == g.has_edge(embedding[a], embedding[b]))
    })
}

/// Lexicographically smallest triangle `(u < v < w)` inside `G[within]`.
pub fn find_triangle_within(g: &Graph, within: &VertexSet) -> Option<[usize; 3]> {
    for u in within.iter() {
        let nu = g.neighbors(u).intersection(within);
        for v in nu.iter().filter(|&v| v > u) {
            let common = nu.intersection(g.neighbors(v));
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    find_triangle_within(g, &g.vertices())
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, hajos_join, named_graph};

    #[test]
    fn pattern_sizes() {
        assert_eq!(PatternName::Dragonfly.graph().n(), 7);
        assert_eq!(PatternName::Dragonfly.graph().edge_count(), 9);
        assert_eq!(PatternName::Butterfly.graph().n(), 5);
        assert_eq!(PatternName::Butterfly.graph().edge_count(), 7);
        let k112 = complete_multipartite(&[1, 1, 2]).unwrap();
        let d = PatternName::Diamond.graph();
        assert!(
            find_induced_copy(&k112, &d).is_some()
                && d.n() == k112.n()
                && d.edge_count() == k112.edge_count()
        );
    }

    #[test]
    fn dragonfly_contains_itself_by_identity() {
        let d = named_graph("Dragonfly").unwrap();
        let e = find_induced_pattern(&d, PatternName::Dragonfly).unwrap();
        assert!(is_induced_embedding(
            &d,
            &PatternName::Dragonfly.graph(),
            &e
        ));
        assert_eq!(e, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn k4_has_no_induced_diamond() {
        let k4 = named_graph("K4").unwrap();
        assert_eq!(find_induced_pattern(&k4, PatternName::Diamond), None);
        assert!(find_induced_pattern(&k4, PatternName::K4).is_some());
    }

    #[test]
    fn hajos_join_of_k5_contains_k4() {
        let h = hajos_join(5).unwrap();
        let e = find_induced_pattern(&h, PatternName::K4).unwrap();
        assert!(is_induced_embedding(&h, &PatternName::K4.graph(), &e));
    }

    #[test]
    fn c5_has_no_diamond_or_triangle() {
        let c5 = named_graph("C5").unwrap();
        assert_eq!(find_induced_pattern(&c5, PatternName::Diamond), None);
        assert_eq!(find_triangle(&c5), None);
    }

    #[test]
    fn triangle_is_lexicographically_smallest() {
        let g =
            Graph::from_edge_list(5, &[(2, 3), (3, 4), (2, 4), (0, 3), (0, 4), (1, 2)]).unwrap();
        assert_eq!(find_triangle(&g), Some([0, 3, 4]));
    }

    #[test]
    fn tripartite_pattern_parsing() {
        assert_eq!(
            "k1,2,2".parse::<PatternName>(),
            Ok(PatternName::CompleteTripartite(1, 2, 2))
        );
        assert_eq!("Diamond".parse::<PatternName>(), Ok(PatternName::Diamond));
        assert!("k0,1,1".parse::<PatternName>().is_err());
        assert!("kite".parse::<PatternName>().is_err());
    }
}
