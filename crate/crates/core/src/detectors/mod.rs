//! Detection of the forbidden substructures: cycles with exactly `k` chords,
//! V-/X-/parallel 2-chord cycles, and small induced patterns.

mod clique;
mod cycles;
mod patterns;

pub use clique::{clique_number, max_clique_within};
pub use cycles::{
    chords_of, cycle_profile, find_crossing_or_v_cycle, find_k_chord_cycle,
    find_two_chord_cycle_of_kind, for_each_cycle, is_in_class_ck, CycleProfile, CycleWitness,
    SearchBudget, SearchError, TwoChordKind, BUDGET_ENV, DEFAULT_BUDGET,
};
pub use patterns::{
    find_induced_copy, find_induced_pattern, find_triangle, find_triangle_within,
    is_induced_embedding, is_triangle_free, PatternName, BUTTERFLY_EDGES, DRAGONFLY_EDGES,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("witness carries {0} chords, classification needs exactly 2")]
    WrongChordCount(usize),
}

/// V, X or parallel, for a witness with exactly two chords.
pub fn classify_two_chord_cycle(w: &CycleWitness) -> Result<TwoChordKind, ClassifyError> {
    w.two_chord_kind()
        .ok_or(ClassifyError::WrongChordCount(w.chord_count()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn witness(cycle: Vec<usize>, chords: Vec<(usize, usize)>) -> CycleWitness {
        CycleWitness { cycle, chords }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_two_chord_cycle(&witness(vec![0, 1, 2, 3], vec![(0, 2), (1, 3)])),
            Ok(TwoChordKind::X)
        );
        assert_eq!(
            classify_two_chord_cycle(&witness(vec![0, 1, 2, 3, 4], vec![(0, 2), (0, 3)])),
            Ok(TwoChordKind::V)
        );
        assert_eq!(
            classify_two_chord_cycle(&witness(vec![0, 1, 2, 3, 4, 5], vec![(0, 2), (3, 5)])),
            Ok(TwoChordKind::Parallel)
        );
        assert_eq!(
            classify_two_chord_cycle(&witness(vec![0, 1, 2, 3], vec![(0, 2)])),
            Err(ClassifyError::WrongChordCount(1))
        );
    }
}
