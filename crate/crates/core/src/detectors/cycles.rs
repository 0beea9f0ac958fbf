//! Exhaustive cycle enumeration with per-cycle chord counts.
//!
//! Every cycle is listed exactly once: rooted at its smallest vertex, grown
//! by DFS through larger vertices only, and closed in the direction where the
//! second vertex is smaller than the last one. The number of edges inside the
//! current path's vertex set is maintained incrementally, so the chord count
//! of a closed cycle is available in O(1) as `inner_edges - length`.
//!
//! Partial paths are never pruned by chord count (chords of a cycle depend
//! on the whole vertex set, not on any prefix); the only cut-off is the
//! partial-path budget.

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CHORDCYCLE_BUDGET";

/// Maximum number of partial paths a single cycle search may explore.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_partial_paths: u64,
}

impl SearchBudget {
    pub const fn new(max_partial_paths: u64) -> Self {
        SearchBudget { max_partial_paths }
    }

    pub const fn unlimited() -> Self {
        SearchBudget::new(u64::MAX)
    }

    /// [`DEFAULT_BUDGET`], unless `CHORDCYCLE_BUDGET` holds a valid integer.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map_or(SearchBudget::new(DEFAULT_BUDGET), SearchBudget::new)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::from_env()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("cycle search exceeded its budget of {limit} partial paths")]
    BudgetExceeded { limit: u64 },
    #[error("exact coloring search exceeded its limit of {limit} nodes")]
    NodeLimit { limit: u64 },
}

/// Calls `visit(cycle, chord_count)` for every cycle of `g` until the visitor
/// breaks. Returns `Break` if the visitor stopped the enumeration early.
pub fn for_each_cycle<F>(
    g: &Graph,
    budget: SearchBudget,
    mut visit: F,
) -> Result<ControlFlow<()>, SearchError>
where
    F: FnMut(&[usize], usize) -> ControlFlow<()>,
{
    let n = g.n();
    let limit = budget.max_partial_paths;
    let mut explored = 0u64;
    let mut path: Vec<usize> = Vec::with_capacity(n);
    let mut on_path = VertexSet::new(n);
    let mut frames: Vec<VertexSet> = Vec::with_capacity(n);
    let mut allowed = g.vertices();

    for root in 0..n {
        allowed.remove(root);
        if g.neighbors(root).intersection_len(&allowed) < 2 {
            continue;
        }
        path.clear();
        path.push(root);
        on_path.clear();
        on_path.insert(root);
        let mut inner_edges = 0usize;
        frames.clear();
        frames.push(g.neighbors(root).intersection(&allowed));

        while let Some(frame) = frames.last_mut() {
            if let Some(w) = frame.first() {
                frame.remove(w);
                explored += 1;
                if explored > limit {
                    return Err(SearchError::BudgetExceeded { limit });
                }
                let nw = g.neighbors(w);
                inner_edges += nw.intersection_len(&on_path);
                path.push(w);
                on_path.insert(w);
                if path.len() >= 3 && nw.contains(root) && path[1] < w {
                    let chords = inner_edges - path.len();
                    if visit(&path, chords).is_break() {
                        return Ok(ControlFlow::Break(()));
                    }
                }
                let mut next = nw.intersection(&allowed);
                next.difference_with(&on_path);
                frames.push(next);
            } else {
                frames.pop();
                if frames.is_empty() {
                    break;
                }
                let v = path.pop().expect("path tracks frames");
                on_path.remove(v);
                inner_edges -= g.neighbors(v).intersection_len(&on_path);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Chords of the cycle `cycle` in `g`, each as `(u, v)` with `u < v`, sorted.
pub fn chords_of(g: &Graph, cycle: &[usize]) -> Vec<(usize, usize)> {
    let m = cycle.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let (a, b) = (cycle[i], cycle[j]);
            if g.has_edge(a, b) {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// How the two chords of a 2-chord cycle sit on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub enum TwoChordKind {
    /// The chords share an endpoint.
    V,
    /// The chord endpoints alternate around the cycle.
    X,
    Parallel,
}

impl TwoChordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TwoChordKind::V => "V",
            TwoChordKind::X => "X",
            TwoChordKind::Parallel => "Parallel",
        }
    }
}

impl std::str::FromStr for TwoChordKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "v" => Ok(TwoChordKind::V),
            "x" => Ok(TwoChordKind::X),
            "parallel" | "p" => Ok(TwoChordKind::Parallel),
            _ => Err(format!(
                "unknown two-chord kind `{s}` (expected V, X or Parallel)"
            )),
        }
    }
}

pub(crate) fn classify_chords(
    cycle: &[usize],
    a: (usize, usize),
    b: (usize, usize),
) -> TwoChordKind {
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return TwoChordKind::V;
    }
    let pos = |v: usize| {
        cycle
            .iter()
            .position(|&x| x == v)
            .expect("chord endpoint on cycle")
    };
    let (mut p, mut q) = (pos(a.0), pos(a.1));
    if p > q {
        std::mem::swap(&mut p, &mut q);
    }
    let inside = |v: usize| {
        let r = pos(v);
        p < r && r < q
    };
    if inside(b.0) != inside(b.1) {
        TwoChordKind::X
    } else {
        TwoChordKind::Parallel
    }
}

/// A cycle of a host graph together with all of its chords.
#[derive(Clone, Debug, PartialEq, Eq, serde::Deserialize)]
pub struct CycleWitness {
    pub cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

impl CycleWitness {
    /// Witness for `cycle` with its chords read off `g`.
    pub fn from_cycle(g: &Graph, cycle: Vec<usize>) -> Self {
        let chords = chords_of(g, &cycle);
        CycleWitness { cycle, chords }
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    /// Checks the witness against `g` without trusting any part of it: the
    /// vertices form a cycle and `chords` is exactly the chord set.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let m = self.cycle.len();
        if m < 3 || self.cycle.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set = VertexSet::from_iter_with_capacity(g.n(), self.cycle.iter().copied());
        if set.len() != m {
            return false;
        }
        if !(0..m).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % m])) {
            return false;
        }
        let mut claimed: Vec<_> = self
            .chords
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        claimed.sort_unstable();
        claimed == chords_of(g, &self.cycle)
    }

    /// Kind of a 2-chord witness; `None` for other chord counts.
    pub fn two_chord_kind(&self) -> Option<TwoChordKind> {
        match self.chords.as_slice() {
            &[a, b] => Some(classify_chords(&self.cycle, a, b)),
            _ => None,
        }
    }

    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> CycleWitness {
        let cycle = self.cycle.iter().map(|&v| f(v)).collect();
        let mut chords: Vec<_> = self
            .chords
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (f(a), f(b));
                (x.min(y), x.max(y))
            })
            .collect();
        chords.sort_unstable();
        CycleWitness { cycle, chords }
    }
}

impl Serialize for CycleWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            cycle: &'a [usize],
            chords: Vec<[usize; 2]>,
            kind: Option<&'static str>,
        }
        Repr {
            cycle: &self.cycle,
            chords: self.chords.iter().map(|&(a, b)| [a, b]).collect(),
            kind: self.two_chord_kind().map(TwoChordKind::as_str),
        }
        .serialize(serializer)
    }
}

/// A cycle of `g` carrying exactly `k` chords, if one exists.
pub fn find_k_chord_cycle(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<CycleWitness>, SearchError> {
    let mut found = None;
    let _ = for_each_cycle(g, budget, |cycle, chords| {
        if chords == k {
            found = Some(cycle.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found.map(|c| CycleWitness::from_cycle(g, c)))
}

/// Membership in the class of graphs with no cycle carrying exactly `k` chords.
pub fn is_in_class_ck(g: &Graph, k: usize, budget: SearchBudget) -> Result<bool, SearchError> {
    Ok(find_k_chord_cycle(g, k, budget)?.is_none())
}

/// A 2-chord cycle of `g` whose chords are of the given kind.
pub fn find_two_chord_cycle_of_kind(
    g: &Graph,
    kind: TwoChordKind,
    budget: SearchBudget,
) -> Result<Option<CycleWitness>, SearchError> {
    let mut found = None;
    let _ = for_each_cycle(g, budget, |cycle, chords| {
        if chords == 2 {
            let ch = chords_of(g, cycle);
            if classify_chords(cycle, ch[0], ch[1]) == kind {
                found = Some(CycleWitness {
                    cycle: cycle.to_vec(),
                    chords: ch,
                });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Any V- or X-cycle of `g`.
pub fn find_crossing_or_v_cycle(
    g: &Graph,
    budget: SearchBudget,
) -> Result<Option<CycleWitness>, SearchError> {
    let mut found = None;
    let _ = for_each_cycle(g, budget, |cycle, chords| {
        if chords == 2 {
            let ch = chords_of(g, cycle);
            if classify_chords(cycle, ch[0], ch[1]) != TwoChordKind::Parallel {
                found = Some(CycleWitness {
                    cycle: cycle.to_vec(),
                    chords: ch,
                });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Which chord counts and 2-chord kinds occur among the cycles of a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CycleProfile {
    /// Bit `k` is set when some cycle has exactly `k` chords (`k < 64`).
    pub chord_counts: u64,
    pub has_v: bool,
    pub has_x: bool,
    pub has_parallel: bool,
}

impl CycleProfile {
    pub fn has_k_chord_cycle(&self, k: usize) -> bool {
        k < 64 && self.chord_counts >> k & 1 == 1
    }

    pub fn in_class(&self, k: usize) -> bool {
        !self.has_k_chord_cycle(k)
    }

    pub fn xv_free(&self) -> bool {
        !self.has_v && !self.has_x
    }
}

/// Computes the part of the [`CycleProfile`] needed to decide membership in
/// the classes `C_1`, `C_2`, `C_3` and (X, V)-freeness, stopping as soon as
/// every one of those answers is settled.
pub fn cycle_profile(g: &Graph, budget: SearchBudget) -> Result<CycleProfile, SearchError> {
    let mut p = CycleProfile::default();
    let _ = for_each_cycle(g, budget, |cycle, chords| {
        if chords < 64 {
            p.chord_counts |= 1 << chords;
        }
        if chords == 2 && !(p.has_v && p.has_x && p.has_parallel) {
            let ch = chords_of(g, cycle);
            match classify_chords(cycle, ch[0], ch[1]) {
                TwoChordKind::V => p.has_v = true,
                TwoChordKind::X => p.has_x = true,
                TwoChordKind::Parallel => p.has_parallel = true,
            }
        }
        let settled = p.chord_counts & 0b1010 == 0b1010 && p.has_v && p.has_x;
        if settled {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, named_graph};

    fn k(n: usize) -> Graph {
        named_graph(&format!("K{n}")).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::new(DEFAULT_BUDGET)
    }

    fn count_cycles(g: &Graph) -> usize {
        let mut c = 0;
        let _ = for_each_cycle(g, budget(), |_, _| {
            c += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        c
    }

    #[test]
    fn cycle_counts_of_complete_graphs() {
        // sum_{m>=3} C(n,m) (m-1)!/2
        assert_eq!(count_cycles(&k(3)), 1);
        assert_eq!(count_cycles(&k(4)), 7);
        assert_eq!(count_cycles(&k(5)), 37);
        assert_eq!(count_cycles(&k(7)), 1172);
    }

    #[test]
    fn k4_has_an_x_cycle_with_two_chords() {
        let w = find_k_chord_cycle(&k(4), 2, budget()).unwrap().unwrap();
        assert!(w.is_valid(&k(4)));
        assert_eq!(w.cycle.len(), 4);
        assert_eq!(w.two_chord_kind(), Some(TwoChordKind::X));
        assert!(!is_in_class_ck(&k(4), 2, budget()).unwrap());
    }

    #[test]
    fn diamond_has_a_one_chord_cycle() {
        let d = complete_multipartite(&[1, 1, 2]).unwrap();
        let w = find_k_chord_cycle(&d, 1, budget()).unwrap().unwrap();
        assert_eq!(w.cycle.len(), 4);
        assert_eq!(w.chord_count(), 1);
    }

    #[test]
    fn k5_has_no_three_chord_cycle() {
        // cycles of K5 of length 3, 4, 5 carry 0, 2, 5 chords
        assert_eq!(find_k_chord_cycle(&k(5), 3, budget()).unwrap(), None);
        assert!(is_in_class_ck(&k(5), 3, budget()).unwrap());
        let p = cycle_profile(&k(5), SearchBudget::unlimited()).unwrap();
        assert!(p.has_k_chord_cycle(0) && p.has_k_chord_cycle(2));
        assert!(!p.has_k_chord_cycle(1) && !p.has_k_chord_cycle(3));
    }

    #[test]
    fn chordless_cycle_is_its_own_witness() {
        let c7 = named_graph("C7").unwrap();
        let w = find_k_chord_cycle(&c7, 0, budget()).unwrap().unwrap();
        assert_eq!(w.cycle.len(), 7);
        assert!(w.chords.is_empty());
        assert!(is_in_class_ck(&named_graph("C5").unwrap(), 1, budget()).unwrap());
    }

    #[test]
    fn classification_examples() {
        let x = classify_chords(&[0, 1, 2, 3], (0, 2), (1, 3));
        assert_eq!(x, TwoChordKind::X);
        let v = classify_chords(&[0, 1, 2, 3, 4], (0, 2), (0, 3));
        assert_eq!(v, TwoChordKind::V);
        let p = classify_chords(&[0, 1, 2, 3, 4, 5], (0, 2), (3, 5));
        assert_eq!(p, TwoChordKind::Parallel);
    }

    #[test]
    fn kind_search_examples() {
        let w = find_two_chord_cycle_of_kind(&k(4), TwoChordKind::X, budget())
            .unwrap()
            .unwrap();
        assert_eq!(w.cycle.len(), 4);
        let c6 = named_graph("C6").unwrap();
        assert_eq!(
            find_two_chord_cycle_of_kind(&c6, TwoChordKind::V, budget()).unwrap(),
            None
        );
        let butterfly = named_graph("Butterfly").unwrap();
        let v = find_two_chord_cycle_of_kind(&butterfly, TwoChordKind::V, budget())
            .unwrap()
            .unwrap();
        assert!(v.is_valid(&butterfly));
        assert_eq!(v.two_chord_kind(), Some(TwoChordKind::V));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let err = find_k_chord_cycle(&k(9), 1, SearchBudget::new(100)).unwrap_err();
        assert_eq!(err, SearchError::BudgetExceeded { limit: 100 });
    }

    #[test]
    fn witness_json_shape() {
        let w = CycleWitness::from_cycle(&k(4), vec![0, 1, 2, 3]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(
            json,
            r#"{"cycle":[0,1,2,3],"chords":[[0,2],[1,3]],"kind":"X"}"#
        );
        let tri = CycleWitness::from_cycle(&k(3), vec![0, 1, 2]);
        assert_eq!(
            serde_json::to_string(&tri).unwrap(),
            r#"{"cycle":[0,1,2],"chords":[],"kind":null}"#
        );
    }

    #[test]
    fn incomplete_chord_list_is_invalid() {
        let mut w = CycleWitness::from_cycle(&k(4), vec![0, 1, 2, 3]);
        w.chords.pop();
        assert!(!w.is_valid(&k(4)));
    }
}
