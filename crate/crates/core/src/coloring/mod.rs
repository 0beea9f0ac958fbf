//! Exact chromatic number and the constructive colorers for the chorded-cycle
//! classes. The colorers return a proper coloring within their bound, a
//! refusal when the input is outside the class (in verifying mode), or a
//! [`FalsificationReport`] when a structural lemma they depend on fails.

pub(crate) mod exact;
mod parity;
pub(crate) mod three_chord;
mod xv;

use serde::Serialize;
use thiserror::Error;

use crate::detectors::{
    find_crossing_or_v_cycle, find_induced_pattern, find_k_chord_cycle, CycleWitness, PatternName,
    SearchBudget, SearchError,
};
use crate::falsification::FalsificationReport;
use crate::graph::{Graph, GraphError, InducedSubgraph};

pub use exact::{
    exact_chromatic_number, exact_chromatic_number_with, DEFAULT_EXACT_CAP, DEFAULT_EXACT_NODES,
};
pub use parity::color_by_parity_levels;
pub use three_chord::{
    color_3cycle_free, color_3cycle_free_with_stats, color_k4_3cycle_free,
    color_triangle_3cycle_free, ReductionStats, K4F3_BOUND, TF3_BOUND,
};
pub use xv::{color_xv_free, XV_BOUND};

/// Hard limit on palettes handled by the exact search (color masks are `u128`).
pub const MAX_EXACT_PALETTE: usize = 128;

/// A total assignment `colors[v] < palette`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    pub palette: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Number of distinct colors appearing.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![
            false;
            self.palette
                .max(self.colors.iter().max().map_or(0, |&c| c + 1))
        ];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassViolation {
    Cycle {
        cycle: CycleWitness,
    },
    Pattern {
        pattern: PatternName,
        embedding: Vec<usize>,
    },
}

#[derive(Debug, Error, Clone)]
pub enum ColoringError {
    #[error("falsification: {0}")]
    Falsified(Box<FalsificationReport>),
    #[error("level {level} from root {root}: {source}")]
    AtLevel {
        root: usize,
        level: usize,
        source: Box<ColoringError>,
    },
    #[error("level coloring uses color {color}, palette allows {palette}")]
    PaletteOverflow { color: usize, palette: usize },
    #[error("exact search limited to {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("input is not {class}")]
    OutOfClass {
        class: &'static str,
        witness: ClassViolation,
    },
    #[error("assignment covers {got} of {expected} vertices")]
    Partial { expected: usize, got: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("level coloring is not proper")]
    Improper,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ColoringError {
    /// The falsification report carried, looking through level wrappers.
    pub fn falsification(&self) -> Option<&FalsificationReport> {
        match self {
            ColoringError::Falsified(r) => Some(r),
            ColoringError::AtLevel { source, .. } => source.falsification(),
            _ => None,
        }
    }

    pub(crate) fn lift(self, sub: &InducedSubgraph, host: &Graph) -> Self {
        match self {
            ColoringError::Falsified(r) => ColoringError::Falsified(Box::new(r.lift(sub, host))),
            other => other,
        }
    }

    pub(crate) fn through_level(
        self,
        level: &InducedSubgraph,
        host: &Graph,
        root: usize,
        index: usize,
    ) -> Self {
        match self {
            ColoringError::Falsified(r) => {
                ColoringError::Falsified(Box::new(r.through_level(level, host, root, index)))
            }
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColorConfig {
    /// Partial-path budget for cycle searches.
    pub budget: SearchBudget,
    /// Node limit for each exact chromatic search.
    pub exact_nodes: u64,
    pub exact_cap: usize,
    /// Check class membership before coloring.
    pub verify_input: bool,
}

impl Default for ColorConfig {
    fn default() -> Self {
        ColorConfig {
            budget: SearchBudget::from_env(),
            exact_nodes: DEFAULT_EXACT_NODES,
            exact_cap: DEFAULT_EXACT_CAP,
            verify_input: true,
        }
    }
}

impl ColorConfig {
    /// No membership checks; for callers that already filtered the input.
    pub fn trusted() -> Self {
        ColorConfig {
            verify_input: false,
            ..Self::default()
        }
    }
}

/// True iff `c` is proper and within its palette.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.colors.len() != g.n() {
        return Err(ColoringError::Partial {
            expected: g.n(),
            got: c.colors.len(),
        });
    }
    Ok(c.colors.iter().all(|&x| x < c.palette)
        && g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Writes `sub`'s coloring into `colors` at host positions.
pub(crate) fn write_lifted(
    colors: &mut [usize],
    sub: &InducedSubgraph,
    part: &Coloring,
    offset: usize,
) {
    for (local, &c) in part.colors.iter().enumerate() {
        colors[sub.lift(local)] = c + offset;
    }
}

/// Renames colors of `second` so it agrees with `first` on the shared clique
/// `shared` (host ids), then writes both into `colors`. Colors on a clique
/// are distinct, so the partial bijection extends to a full permutation of
/// the palette; unmatched colors go to unused targets in ascending order.
pub(crate) fn merge_on_clique(
    colors: &mut [usize],
    palette: usize,
    first: (&InducedSubgraph, &Coloring),
    second: (&InducedSubgraph, &Coloring),
    shared: impl Iterator<Item = usize>,
) {
    write_lifted(colors, first.0, first.1, 0);
    let mut perm = vec![usize::MAX; palette];
    let mut taken = vec![false; palette];
    for v in shared {
        let local = second.0.to_local(v).expect("cutset on both sides");
        let from = second.1.colors[local];
        perm[from] = colors[v];
        taken[colors[v]] = true;
    }
    let mut free = (0..palette).filter(|&c| !taken[c]);
    for slot in perm.iter_mut().filter(|p| **p == usize::MAX) {
        *slot = free.next().expect("permutation of a finite palette");
    }
    for (local, &c) in second.1.colors.iter().enumerate() {
        colors[second.0.lift(local)] = perm[c];
    }
}

/// Colors each component of `g` with `color_one` on a shared palette.
pub(crate) fn per_component<F>(
    g: &Graph,
    palette: usize,
    mut color_one: F,
) -> Result<Coloring, ColoringError>
where
    F: FnMut(&Graph) -> Result<Coloring, ColoringError>,
{
    let comps = g.connected_components();
    if comps.len() == 1 {
        let mut c = color_one(g)?;
        c.palette = palette;
        return Ok(c);
    }
    let mut colors = vec![0; g.n()];
    for comp in comps {
        let sub = g.induced(&comp);
        let c = color_one(&sub.graph).map_err(|e| e.lift(&sub, g))?;
        write_lifted(&mut colors, &sub, &c, 0);
    }
    Ok(Coloring { palette, colors })
}

pub(crate) fn require_xv_free(g: &Graph, budget: SearchBudget) -> Result<(), ColoringError> {
    match find_crossing_or_v_cycle(g, budget)? {
        Some(cycle) => Err(ColoringError::OutOfClass {
            class: "(X-cycle, V-cycle)-free",
            witness: ClassViolation::Cycle { cycle },
        }),
        None => Ok(()),
    }
}

pub(crate) fn require_3cycle_free(g: &Graph, budget: SearchBudget) -> Result<(), ColoringError> {
    match find_k_chord_cycle(g, 3, budget)? {
        Some(cycle) => Err(ColoringError::OutOfClass {
            class: "3-cycle-free",
            witness: ClassViolation::Cycle { cycle },
        }),
        None => Ok(()),
    }
}

pub(crate) fn require_pattern_free(
    g: &Graph,
    pattern: PatternName,
    class: &'static str,
) -> Result<(), ColoringError> {
    match find_induced_pattern(g, pattern) {
        Some(embedding) => Err(ColoringError::OutOfClass {
            class,
            witness: ClassViolation::Pattern { pattern, embedding },
        }),
        None => Ok(()),
    }
}
