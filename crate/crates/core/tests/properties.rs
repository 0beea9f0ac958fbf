mod common;

use chordcycle::coloring::{
    color_3cycle_free, color_by_parity_levels, color_triangle_3cycle_free, color_xv_free,
    exact_chromatic_number, verify_coloring, ColorConfig, K4F3_BOUND, TF3_BOUND, XV_BOUND,
};
use chordcycle::decompose::{
    find_clique_cutset, minimal_triangle_hitting_set, split_on_clique_cutset, trichotomy,
};
use chordcycle::detectors::{
    classify_two_chord_cycle, clique_number, cycle_profile, find_k_chord_cycle, find_triangle,
    find_two_chord_cycle_of_kind, CycleWitness, SearchBudget, TwoChordKind,
};
use chordcycle::generators::complete_multipartite;
use chordcycle::io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use chordcycle::{Graph, VertexSet};
use common::{graph_from_bits, relabel, CycleOracle};
use proptest::prelude::*;

fn budget() -> SearchBudget {
    SearchBudget::unlimited()
}

/// Graphs on `lo..=hi` vertices with edge probability `p`.
fn graphs(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec(prop::bool::weighted(p), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn connected(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = Graph> {
    graphs(lo, hi, p).prop_filter("connected", Graph::is_connected)
}

fn with_permutation(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graphs(lo, hi, p).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

#[test]
fn oracle_counts_cycles_of_complete_graphs() {
    // sum over L of C(n, L) (L - 1)! / 2
    for (n, count) in [(3, 1), (4, 7), (5, 37), (6, 197), (7, 1172)] {
        assert_eq!(CycleOracle::new(n).cycle_count(), count);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trips(g in graphs(0, 70, 0.3)) {
        prop_assert!(g.check_invariants());
        let back = parse_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn edge_list_round_trips(g in graphs(0, 30, 0.2)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn bfs_edges_span_at_most_one_level(g in graphs(1, 25, 0.15), r in 0usize..25) {
        let root = r % g.n();
        let d = g.bfs_levels(root).unwrap();
        for (u, v) in g.edges() {
            if let (Some(a), Some(b)) = (d.level_of(u), d.level_of(v)) {
                prop_assert!(a.abs_diff(b) <= 1);
            } else {
                prop_assert!(d.level_of(u).is_none() && d.level_of(v).is_none());
            }
        }
        let reached: usize = d.sizes().iter().sum();
        prop_assert_eq!(reached + d.unreached.len(), g.n());
    }

    #[test]
    fn detector_matches_oracle_on_eight_vertices(bits in prop::collection::vec(any::<bool>(), 28)) {
        let g = graph_from_bits(8, &bits);
        let oracle = CycleOracle::new(8).chord_counts(&g);
        for k in 0..4 {
            let found = find_k_chord_cycle(&g, k, budget()).unwrap();
            prop_assert_eq!(found.is_some(), oracle >> k & 1 == 1, "k = {}", k);
            if let Some(w) = found {
                prop_assert!(w.is_valid(&g));
                prop_assert_eq!(w.chord_count(), k);
            }
        }
    }

    #[test]
    fn classes_ignore_labels((g, perm) in with_permutation(1, 8, 0.45)) {
        let h = relabel(&g, &perm);
        let a = cycle_profile(&g, budget()).unwrap();
        let b = cycle_profile(&h, budget()).unwrap();
        for k in 1..4 {
            prop_assert_eq!(a.in_class(k), b.in_class(k));
        }
        prop_assert_eq!(a.xv_free(), b.xv_free());
        prop_assert_eq!(clique_number(&g).0, clique_number(&h).0);
    }

    #[test]
    fn classes_are_hereditary(g in graphs(3, 9, 0.4), drop in prop::collection::vec(any::<bool>(), 9)) {
        let keep = VertexSet::from_iter_with_capacity(
            g.n(),
            (0..g.n()).filter(|&v| !drop[v]),
        );
        let h = g.induced_subgraph(&keep).unwrap().graph;
        for k in 1..4 {
            if find_k_chord_cycle(&g, k, budget()).unwrap().is_none() {
                prop_assert!(find_k_chord_cycle(&h, k, budget()).unwrap().is_none());
            }
        }
    }

    #[test]
    fn two_chord_kind_survives_rotation_and_reflection(
        g in graphs(4, 8, 0.5),
        shift in 0usize..8,
        reflect in any::<bool>(),
    ) {
        for kind in [TwoChordKind::V, TwoChordKind::X, TwoChordKind::Parallel] {
            let Some(w) = find_two_chord_cycle_of_kind(&g, kind, budget()).unwrap() else {
                continue;
            };
            prop_assert_eq!(classify_two_chord_cycle(&w).unwrap(), kind);
            let mut cycle = w.cycle.clone();
            let len = cycle.len();
            cycle.rotate_left(shift % len);
            if reflect {
                cycle.reverse();
            }
            let moved = CycleWitness::from_cycle(&g, cycle);
            prop_assert!(moved.is_valid(&g));
            prop_assert_eq!(classify_two_chord_cycle(&moved).unwrap(), kind);
        }
    }

    #[test]
    fn exact_chi_is_at_least_omega(g in graphs(0, 12, 0.5)) {
        let (chi, c) = exact_chromatic_number(&g).unwrap();
        prop_assert!(verify_coloring(&g, &c).unwrap());
        prop_assert!(chi >= clique_number(&g).0);
        prop_assert_eq!(c.colors_used(), chi);
    }

    #[test]
    fn complete_multipartite_chi_is_the_part_count(sizes in prop::collection::vec(1usize..4, 1..6)) {
        let g = complete_multipartite(&sizes).unwrap();
        prop_assert_eq!(exact_chromatic_number(&g).unwrap().0, sizes.len());
        prop_assert_eq!(clique_number(&g).0, sizes.len());
    }

    #[test]
    fn parity_levels_keep_palettes_apart(g in connected(1, 12, 0.3), r in 0usize..12) {
        let root = r % g.n();
        let p = 4;
        let c = color_by_parity_levels(&g, root, |h| exact_chromatic_number(h).map(|x| x.1), p);
        let Ok(c) = c else {
            // a level needing more than p colors
            return Ok(());
        };
        prop_assert!(verify_coloring(&g, &c).unwrap());
        let d = g.bfs_levels(root).unwrap();
        for v in 0..g.n() {
            let level = d.level_of(v).unwrap();
            prop_assert_eq!(c.colors[v] / p, level % 2);
        }
    }

    #[test]
    fn hitting_sets_are_minimal(g in graphs(0, 10, 0.45)) {
        let t = minimal_triangle_hitting_set(&g);
        prop_assert!(t.verify(&g));
        let rest = g.without(&t.vertices).graph;
        prop_assert!(find_triangle(&rest).is_none());
        for v in t.vertices.iter() {
            let mut smaller = t.vertices.clone();
            smaller.remove(v);
            prop_assert!(find_triangle(&g.without(&smaller).graph).is_some());
        }
    }

    #[test]
    fn cutset_splits_have_no_cross_edges(g in connected(3, 10, 0.3)) {
        if let Some(s) = find_clique_cutset(&g).unwrap() {
            prop_assert!(g.is_clique(&s));
            prop_assert!(g.separates(&s));
            let split = split_on_clique_cutset(&g, &s).unwrap();
            let side = |sub: &chordcycle::InducedSubgraph| {
                VertexSet::from_iter_with_capacity(
                    g.n(),
                    (0..sub.graph.n()).map(|i| sub.lift(i)).filter(|&v| !s.contains(v)),
                )
            };
            let (a, b) = (side(&split.first), side(&split.second));
            prop_assert!(!a.is_empty() && !b.is_empty());
            for u in a.iter() {
                prop_assert!(!g.neighbors(u).intersects(&b));
            }
        }
    }

    #[test]
    fn xv_free_graphs_get_verified_tags_and_six_colors(g in connected(1, 11, 0.25)) {
        prop_assume!(cycle_profile(&g, budget()).unwrap().xv_free());
        let tag = trichotomy(&g).unwrap();
        prop_assert!(tag.verify(&g));
        let c = color_xv_free(&g, &ColorConfig::default()).unwrap();
        prop_assert!(verify_coloring(&g, &c).unwrap());
        prop_assert!(c.palette <= XV_BOUND);
    }

    #[test]
    fn bipartite_graphs_without_three_chord_cycles_get_24_colors(
        a in 1usize..7,
        bits in prop::collection::vec(prop::bool::weighted(0.35), 49),
    ) {
        let b = 7;
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                if bits[u * b + v] {
                    edges.push((u, a + v));
                }
            }
        }
        let g = Graph::from_edge_list(a + b, &edges).unwrap();
        prop_assume!(find_k_chord_cycle(&g, 3, budget()).unwrap().is_none());
        let c = color_triangle_3cycle_free(&g, &ColorConfig::default()).unwrap();
        prop_assert!(verify_coloring(&g, &c).unwrap());
        prop_assert!(c.colors_used() <= TF3_BOUND);
    }

    #[test]
    fn three_chord_free_graphs_stay_within_the_bound(g in graphs(1, 11, 0.35)) {
        prop_assume!(find_k_chord_cycle(&g, 3, budget()).unwrap().is_none());
        let c = color_3cycle_free(&g, &ColorConfig::default()).unwrap();
        prop_assert!(verify_coloring(&g, &c).unwrap());
        prop_assert!(c.palette <= K4F3_BOUND.max(clique_number(&g).0 + 1));
    }
}
