use std::collections::HashSet;

use chordcycle::coloring::exact_chromatic_number;
use chordcycle::detectors::{clique_number, is_in_class_ck, SearchBudget};
use chordcycle::generators::{enumerate_labeled, hajos_join};
use chordcycle::io::{parse_graph6, to_graph6};

#[test]
fn graph6_round_trip_on_every_small_graph() {
    for n in 0..=7 {
        let mut seen = HashSet::new();
        let stream = enumerate_labeled(n).unwrap();
        let total = stream.total();
        assert_eq!(total, 1 << (n * n.saturating_sub(1) / 2));
        for g in stream {
            assert!(g.check_invariants());
            let code = to_graph6(&g);
            assert_eq!(parse_graph6(&code).unwrap(), g, "{code}");
            assert!(seen.insert(code), "duplicate graph on {n} vertices");
        }
        assert_eq!(seen.len() as u64, total);
    }
}

#[test]
fn hajos_joins_are_tight() {
    for k in 2..=8 {
        let g = hajos_join(k).unwrap();
        assert_eq!(g.n(), 2 * k + 1);
        assert_eq!(clique_number(&g).0, k);
        assert_eq!(exact_chromatic_number(&g).unwrap().0, k + 1, "k = {k}");
        if k <= 7 {
            assert!(is_in_class_ck(&g, 3, SearchBudget::new(100_000_000)).unwrap());
        }
    }
}
