//! Colorers for graphs with no cycle carrying exactly three chords:
//! 24 colors when triangle-free, 96 when K4-free, and `max(96, ω + 1)` in
//! general.

use crate::bitset::VertexSet;
use crate::coloring::parity::parity_lifted;
use crate::coloring::xv::xv;
use crate::coloring::{
    per_component, require_3cycle_free, require_pattern_free, write_lifted, ColorConfig, Coloring,
    ColoringError,
};
use crate::decompose::{
    find_clique_cutset_within, minimal_triangle_hitting_set_within, split_sets,
};
use crate::detectors::{
    find_crossing_or_v_cycle, find_induced_pattern, find_triangle_within,
    find_two_chord_cycle_of_kind, max_clique_within, PatternName, TwoChordKind,
};
use crate::falsification::{
    CliqueClaim, CycleDefect, FalsificationReport, LevelScope, TheoremId, Witness,
};
use crate::graph::Graph;

/// Palette of the triangle-free colorer.
pub const TF3_BOUND: usize = 24;
/// Palette of the K4-free colorer.
pub const K4F3_BOUND: usize = 4 * TF3_BOUND;

pub fn color_triangle_3cycle_free(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    if cfg.verify_input {
        require_pattern_free(g, PatternName::Triangle, "triangle-free")?;
        require_3cycle_free(g, cfg.budget)?;
    }
    tf3(g, cfg)
}

pub fn color_k4_3cycle_free(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    if cfg.verify_input {
        require_pattern_free(g, PatternName::K4, "K4-free")?;
        require_3cycle_free(g, cfg.budget)?;
    }
    k4f3(g, cfg)
}

pub fn color_3cycle_free(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    color_3cycle_free_with_stats(g, cfg).map(|(c, _)| c)
}

pub fn color_3cycle_free_with_stats(
    g: &Graph,
    cfg: &ColorConfig,
) -> Result<(Coloring, ReductionStats), ColoringError> {
    if cfg.verify_input {
        require_3cycle_free(g, cfg.budget)?;
    }
    c3(g, cfg)
}

/// Outer levels (12 colors each) are split into components; each component
/// is colored by inner levels (6 colors each) with the (X, V)-free colorer.
pub(crate) fn tf3(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    per_component(g, TF3_BOUND, |h| {
        parity_lifted(h, 0, |level| tf3_level(level, cfg), TF3_BOUND / 2)
    })
}

fn tf3_level(level: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    let inner = |d: &Graph| parity_lifted(d, 0, |m| inner_level(m, cfg), TF3_BOUND / 4);
    per_component(level, TF3_BOUND / 2, inner).map_err(|e| match e {
        ColoringError::Falsified(_) => {
            match find_two_chord_cycle_of_kind(level, TwoChordKind::V, cfg.budget) {
                Ok(Some(cycle)) => ColoringError::Falsified(Box::new(FalsificationReport::new(
                    TheoremId::VCycle,
                    level,
                    Witness::LevelCycle {
                        at: LevelScope::whole(level),
                        defect: CycleDefect::VCycle,
                        cycle,
                    },
                ))),
                Ok(None) => e,
                Err(s) => s.into(),
            }
        }
        other => other,
    })
}

fn inner_level(m: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    xv(m, cfg).map_err(|e| match e {
        ColoringError::Falsified(_) => match find_crossing_or_v_cycle(m, cfg.budget) {
            Ok(Some(cycle)) => ColoringError::Falsified(Box::new(FalsificationReport::new(
                TheoremId::CrossingCycle,
                m,
                Witness::LevelCycle {
                    at: LevelScope::whole(m),
                    defect: CycleDefect::CrossingOrV,
                    cycle,
                },
            ))),
            Ok(None) => e,
            Err(s) => s.into(),
        },
        other => other,
    })
}

/// Levels get 48 colors: a minimal triangle hitting set `T` of the level
/// and its complement are both triangle-free, and each takes 24.
pub(crate) fn k4f3(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    per_component(g, K4F3_BOUND, |h| {
        parity_lifted(h, 0, |level| k4f3_level(level, cfg), K4F3_BOUND / 2)
    })
}

fn k4f3_level(h: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    let all = h.vertices();
    let t = minimal_triangle_hitting_set_within(h, &all).vertices;
    if let Some(triangle) = find_triangle_within(h, &t) {
        let at = LevelScope::whole(h);
        let (id, witness) = if let Some(embedding) = find_induced_pattern(h, PatternName::Dragonfly)
        {
            (
                TheoremId::NoDragonfly,
                Witness::LevelPattern {
                    at,
                    pattern: PatternName::Dragonfly,
                    embedding,
                },
            )
        } else if let Some(embedding) = find_induced_pattern(h, PatternName::Butterfly) {
            (
                TheoremId::Butterfly,
                Witness::LevelPattern {
                    at,
                    pattern: PatternName::Butterfly,
                    embedding,
                },
            )
        } else {
            (
                TheoremId::DragonOrButter,
                Witness::HittingSetTriangle {
                    at,
                    hitting_set: t.to_vec(),
                    triangle,
                },
            )
        };
        return Err(ColoringError::Falsified(Box::new(
            FalsificationReport::new(id, h, witness),
        )));
    }
    let mut colors = vec![0; h.n()];
    for (set, offset) in [(all.difference(&t), 0), (t, TF3_BOUND)] {
        let sub = h.induced(&set);
        let c = tf3(&sub.graph, cfg).map_err(|e| e.lift(&sub, h))?;
        write_lifted(&mut colors, &sub, &c, offset);
    }
    Ok(Coloring {
        palette: K4F3_BOUND / 2,
        colors,
    })
}

/// Counters from one run of the large-clique reduction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReductionStats {
    /// Vertices removed by low degree or twin steps.
    pub deletions: usize,
    pub cutset_splits: usize,
    /// Subgraphs handed to the K4-free or triangle-free colorers.
    pub delegations: usize,
    /// Longest chain of reduction steps, each on a strictly smaller vertex
    /// set; at most `n`.
    pub max_depth: usize,
}

enum Task {
    /// Color `G[set]`; `depth` counts the steps that led here.
    Solve(VertexSet, usize),
    /// Color `v` with the smallest color absent from its neighbors in `within`.
    Greedy {
        v: usize,
        within: VertexSet,
    },
    /// Give `twin` the color of `like`.
    Twin {
        twin: usize,
        like: usize,
    },
    SaveCutset(VertexSet),
    /// Rename colors on `side` so the cutset gets back its saved colors.
    Realign {
        side: VertexSet,
        cutset: VertexSet,
    },
}

/// The large-clique reduction with an explicit task stack.
pub(crate) fn c3(
    g: &Graph,
    cfg: &ColorConfig,
) -> Result<(Coloring, ReductionStats), ColoringError> {
    let omega = max_clique_within(g, &g.vertices()).0;
    let palette = K4F3_BOUND.max(omega + 1);
    let mut colors = vec![usize::MAX; g.n()];
    let mut saved: Vec<Vec<usize>> = Vec::new();
    let mut stats = ReductionStats::default();
    let mut stack = vec![Task::Solve(g.vertices(), 0)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Solve(w, depth) => {
                if w.is_empty() {
                    continue;
                }
                stats.max_depth = stats.max_depth.max(depth);
                let comps = g.components_within(&w);
                if comps.len() > 1 {
                    stack.extend(comps.into_iter().rev().map(|c| Task::Solve(c, depth + 1)));
                    continue;
                }
                reduce_step(g, w, depth + 1, cfg, &mut colors, &mut stack, &mut stats)?;
            }
            Task::Greedy { v, within } => {
                let mut used = vec![false; palette];
                for u in g.neighbors(v).intersection(&within).iter() {
                    used[colors[u]] = true;
                }
                colors[v] = used
                    .iter()
                    .position(|&b| !b)
                    .expect("palette exceeds degree");
            }
            Task::Twin { twin, like } => colors[twin] = colors[like],
            Task::SaveCutset(s) => saved.push(s.iter().map(|v| colors[v]).collect()),
            Task::Realign { side, cutset } => {
                let want = saved.pop().expect("saved before realign");
                let mut perm = vec![usize::MAX; palette];
                let mut taken = vec![false; palette];
                for (v, &c) in cutset.iter().zip(&want) {
                    perm[colors[v]] = c;
                    taken[c] = true;
                }
                let mut free = (0..palette).filter(|&c| !taken[c]);
                for slot in perm.iter_mut().filter(|p| **p == usize::MAX) {
                    *slot = free.next().expect("finite palette");
                }
                for v in side.iter() {
                    colors[v] = perm[colors[v]];
                }
            }
        }
    }
    Ok((Coloring { palette, colors }, stats))
}

fn reduce_step(
    g: &Graph,
    w: VertexSet,
    depth: usize,
    cfg: &ColorConfig,
    colors: &mut [usize],
    stack: &mut Vec<Task>,
    stats: &mut ReductionStats,
) -> Result<(), ColoringError> {
    let (omega, clique) = max_clique_within(g, &w);
    if omega <= 3 {
        stats.delegations += 1;
        let sub = g.induced(&w);
        let c = if find_triangle_within(g, &w).is_none() {
            tf3(&sub.graph, cfg)
        } else {
            k4f3(&sub.graph, cfg)
        };
        let c = c.map_err(|e| e.lift(&sub, g))?;
        write_lifted(colors, &sub, &c, 0);
        return Ok(());
    }
    if let Some(v) = w
        .iter()
        .find(|&v| g.neighbors(v).intersection_len(&w) <= omega)
    {
        stats.deletions += 1;
        let mut rest = w.clone();
        rest.remove(v);
        stack.push(Task::Greedy { v, within: w });
        stack.push(Task::Solve(rest, depth));
        return Ok(());
    }
    if let Some(s) = find_clique_cutset_within(g, &w).map_err(|_| ColoringError::Disconnected)? {
        stats.cutset_splits += 1;
        let (a, b) = split_sets(g, &w, &s).map_err(|_| ColoringError::Disconnected)?;
        stack.push(Task::Realign {
            side: b.clone(),
            cutset: s.clone(),
        });
        stack.push(Task::Solve(b, depth));
        stack.push(Task::SaveCutset(s));
        stack.push(Task::Solve(a, depth));
        return Ok(());
    }
    match clique_structure(g, &w, &clique) {
        Ok((like, twin)) => {
            stats.deletions += 1;
            let mut rest = w.clone();
            rest.remove(twin);
            stack.push(Task::Twin { twin, like });
            stack.push(Task::Solve(rest, depth));
            Ok(())
        }
        Err((claim, vertices)) => {
            let witness = Witness::CliqueStructure {
                claim: claim.as_str(),
                scope: w.to_vec(),
                clique: clique.to_vec(),
                vertices,
            };
            Err(ColoringError::Falsified(Box::new(
                FalsificationReport::new(TheoremId::CliqueReduction(claim), g, witness),
            )))
        }
    }
}

/// For `G[w]` with maximum clique `k`: sorts `N(K)` into `S_i` (one
/// neighbor `x_i` in `K`) and `T_i` (all of `K` but `x_i`), and returns the two
/// smallest members `(t1, t2)` of the unique nonempty `T_i` once every
/// claim holds. On failure, the claim and its offending vertices.
fn clique_structure(
    g: &Graph,
    w: &VertexSet,
    k: &VertexSet,
) -> Result<(usize, usize), (CliqueClaim, Vec<usize>)> {
    let omega = k.len();
    let xs = k.to_vec();
    let mut s_sets = vec![VertexSet::new(g.n()); omega];
    let mut t_sets = vec![VertexSet::new(g.n()); omega];
    for u in w.difference(k).iter() {
        let nk = g.neighbors(u).intersection(k);
        match nk.len() {
            0 => {}
            1 => {
                let i = xs
                    .iter()
                    .position(|&x| nk.contains(x))
                    .expect("one neighbor");
                s_sets[i].insert(u);
            }
            d if d + 1 == omega => {
                let i = xs
                    .iter()
                    .position(|&x| !nk.contains(x))
                    .expect("one non-neighbor");
                t_sets[i].insert(u);
            }
            _ => return Err((CliqueClaim::DegDansK, vec![u])),
        }
    }
    let nonempty: Vec<usize> = (0..omega)
        .filter(|&i| !s_sets[i].is_empty() || !t_sets[i].is_empty())
        .collect();
    if nonempty.len() != 1 {
        return Err((CliqueClaim::Ui, nonempty.iter().map(|&i| xs[i]).collect()));
    }
    let i = nonempty[0];
    let (s1, t1) = (&s_sets[i], &t_sets[i]);
    if t1.len() < 2 {
        return Err((CliqueClaim::MinDeg, t1.to_vec()));
    }
    if let Some(bad) = t1.iter().find(|&t| g.neighbors(t).intersects(t1)) {
        return Err((CliqueClaim::Connection, vec![bad]));
    }
    let allowed = s1.union(k);
    let mut target = allowed.clone();
    target.remove(xs[i]);
    for t in t1.iter() {
        let nt = g.neighbors(t).intersection(w);
        if !nt.is_subset(&allowed) {
            return Err((CliqueClaim::Twin, vec![t]));
        }
        if nt != target {
            return Err((CliqueClaim::Final, vec![t]));
        }
    }
    let mut it = t1.iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

/// Re-runs the claim checks of the reduction on `G[w]` around clique `k`,
/// after confirming `G[w]` is a graph the reduction would reach: connected,
/// `k` a maximum clique of size at least 4, minimum degree above `|k|`, and
/// no clique cutset.
pub(crate) fn clique_structure_failure(
    g: &Graph,
    w: &VertexSet,
    k: &VertexSet,
) -> Option<(CliqueClaim, Vec<usize>)> {
    let omega = k.len();
    let reachable = !w.is_empty()
        && k.is_subset(w)
        && g.is_clique(k)
        && omega >= 4
        && max_clique_within(g, w).0 == omega
        && g.components_within(w).len() == 1
        && w.iter().all(|v| g.neighbors(v).intersection_len(w) > omega)
        && matches!(find_clique_cutset_within(g, w), Ok(None));
    if !reachable {
        return None;
    }
    clique_structure(g, w, k).err()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::exact::exact_chromatic_number;
    use crate::coloring::verify_coloring;
    use crate::detectors::{find_k_chord_cycle, SearchBudget};
    use crate::generators::{hajos_join, named_graph};

    fn cfg() -> ColorConfig {
        ColorConfig::default()
    }

    #[test]
    fn odd_cycle_triangle_free() {
        let c9 = named_graph("C9").unwrap();
        let c = color_triangle_3cycle_free(&c9, &cfg()).unwrap();
        assert!(verify_coloring(&c9, &c).unwrap());
        assert!(c.palette <= TF3_BOUND);
        assert_eq!(exact_chromatic_number(&c9).unwrap().0, 3);
    }

    #[test]
    fn petersen_when_in_class() {
        let p = named_graph("Petersen").unwrap();
        let in_class = find_k_chord_cycle(&p, 3, SearchBudget::new(1 << 30))
            .unwrap()
            .is_none();
        let r = color_triangle_3cycle_free(&p, &cfg());
        if in_class {
            let c = r.unwrap();
            assert!(verify_coloring(&p, &c).unwrap());
        } else {
            assert!(matches!(r, Err(ColoringError::OutOfClass { .. })));
        }
    }

    #[test]
    fn k4_free_examples() {
        let d = named_graph("Dragonfly").unwrap();
        let c = color_k4_3cycle_free(&d, &cfg()).unwrap();
        assert!(verify_coloring(&d, &c).unwrap());
        assert!(c.palette <= K4F3_BOUND);
        let c5 = named_graph("C5").unwrap();
        let c = color_k4_3cycle_free(&c5, &cfg()).unwrap();
        assert!(c.colors_used() <= 48);
        assert!(matches!(
            color_k4_3cycle_free(&named_graph("K4").unwrap(), &cfg()),
            Err(ColoringError::OutOfClass { .. })
        ));
    }

    #[test]
    fn hajos_joins() {
        for k in 2..=6 {
            let h = hajos_join(k).unwrap();
            let (c, _) = c3(&h, &cfg()).unwrap();
            assert!(verify_coloring(&h, &c).unwrap());
            assert_eq!(c.palette, K4F3_BOUND.max(k + 1));
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 4..=9 {
            let kn = named_graph(&format!("K{n}")).unwrap();
            let c = color_3cycle_free(&kn, &cfg()).unwrap();
            assert!(verify_coloring(&kn, &c).unwrap());
            assert_eq!(c.colors_used(), n);
        }
    }

    #[test]
    fn large_clique_with_twins() {
        // K6 on 0..5 plus twins 6, 7 adjacent to all of it but vertex 0, and
        // to the S-vertices 8, 9, which see only vertex 0
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        for t in [6, 7] {
            edges.extend((1..6).map(|x| (t, x)));
            edges.extend([(t, 8), (t, 9)]);
        }
        edges.extend([(8, 0), (9, 0)]);
        let g = Graph::from_edge_list(10, &edges).unwrap();
        let all = g.vertices();
        let k = VertexSet::from_iter_with_capacity(10, 0..6);
        assert_eq!(clique_structure(&g, &all, &k), Ok((6, 7)));
        let (c, stats) = c3(&g, &cfg()).unwrap();
        assert!(verify_coloring(&g, &c).unwrap());
        assert!(stats.deletions > 0);
    }

    #[test]
    fn claim_failures_are_named() {
        // a vertex seeing two of the six clique vertices
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        edges.extend([(6, 0), (6, 1)]);
        let g = Graph::from_edge_list(7, &edges).unwrap();
        let k = VertexSet::from_iter_with_capacity(7, 0..6);
        assert_eq!(
            clique_structure(&g, &g.vertices(), &k),
            Err((CliqueClaim::DegDansK, vec![6]))
        );
    }
}
