//! Per-graph property suites.

use serde::Serialize;

use crate::campaign::{CampaignConfig, GraphRecord, Status, Theorem};
use crate::coloring::{
    color_3cycle_free_with_stats, color_k4_3cycle_free, color_triangle_3cycle_free, color_xv_free,
    exact_chromatic_number_with, verify_coloring, ColorConfig, Coloring, ColoringError, K4F3_BOUND,
    TF3_BOUND, XV_BOUND,
};
use crate::decompose::{trichotomy, DecomposeError};
use crate::detectors::{
    clique_number, cycle_profile, find_crossing_or_v_cycle, find_induced_pattern,
    find_k_chord_cycle, find_two_chord_cycle_of_kind, CycleProfile, CycleWitness, PatternName,
    SearchError, TwoChordKind,
};
use crate::falsification::{
    CycleDefect, FalsificationReport, LevelRef, LevelScope, TheoremId, Witness,
};
use crate::generators::hajos_join;
use crate::graph::Graph;
use crate::io::to_graph6;

/// Class memberships of a graph. Cycle-based flags are `None` when the
/// cycle search ran out of budget.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub connected: bool,
    pub c1: Option<bool>,
    pub c2: Option<bool>,
    pub c3: Option<bool>,
    pub xv_free: Option<bool>,
    pub v_free: Option<bool>,
    pub triangle_free: bool,
    pub k4_free: bool,
    pub diamond_free: bool,
}

impl ClassFlags {
    fn with_cycles(mut self, p: &CycleProfile) -> Self {
        self.c1 = Some(p.in_class(1));
        self.c2 = Some(p.in_class(2));
        self.c3 = Some(p.in_class(3));
        self.xv_free = Some(p.xv_free());
        self.v_free = Some(!p.has_v);
        self
    }
}

/// A failed check that is not a falsification of a lemma: an answer that
/// contradicts a bound, or a colorer misbehaving.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Colorer output with a monochromatic edge or a color outside its palette.
    ImproperColoring {
        coloring: Coloring,
    },
    BoundExceeded {
        colors_used: usize,
        bound: usize,
    },
    ChromaticAboveBound {
        chi: usize,
        bound: usize,
    },
    ColorerError {
        message: String,
    },
    UnverifiedWitness {
        report: Box<FalsificationReport>,
    },
    TagRejected {
        tag: String,
    },
    ScottInequality {
        root: usize,
        chi: usize,
        even_max: usize,
        odd_max: usize,
    },
    ReductionTooDeep {
        depth: usize,
        n: usize,
    },
    HajosClique {
        k: usize,
        omega: usize,
    },
    HajosChromatic {
        k: usize,
        chi: usize,
    },
    HajosThreeChordCycle {
        cycle: CycleWitness,
    },
}

#[derive(Default)]
struct Outcome {
    colors_used: Option<usize>,
    bound: Option<usize>,
    falsifications: Vec<FalsificationReport>,
    violations: Vec<Violation>,
}

enum Stop {
    Capped(String),
}

impl From<SearchError> for Stop {
    fn from(e: SearchError) -> Self {
        Stop::Capped(e.to_string())
    }
}

/// Runs `theorem`'s suite on `g`. `None` when `g` is outside the suite's class.
pub fn evaluate(
    theorem: Theorem,
    g: &Graph,
    index: u64,
    cfg: &CampaignConfig,
) -> Option<GraphRecord> {
    let n = g.n();
    let (omega, _) = clique_number(g);
    let mut flags = ClassFlags {
        connected: g.is_connected(),
        triangle_free: omega <= 2,
        k4_free: omega <= 3,
        diamond_free: find_induced_pattern(g, PatternName::Diamond).is_none(),
        ..ClassFlags::default()
    };
    if n == 0 || !flags.connected || !admits_cheaply(theorem, g, &flags) {
        return None;
    }
    let mut record = GraphRecord {
        index,
        graph6: to_graph6(g),
        n,
        status: Status::Pass,
        classes: flags,
        omega,
        chi: None,
        colors_used: None,
        bound: None,
        bound_satisfied: true,
        falsifications: Vec::new(),
        violations: Vec::new(),
        capped: None,
    };
    match cycle_profile(g, cfg.search_budget()) {
        Ok(p) => flags = flags.with_cycles(&p),
        // Only the suites that do not filter on cycles can go on without it.
        Err(e) if !matches!(theorem, Theorem::Scott | Theorem::Hajos) => {
            return Some(capped(record, e.to_string()));
        }
        Err(_) => {}
    }
    record.classes = flags;
    if !admits(theorem, &flags) {
        return None;
    }
    let chi = match exact_chromatic_number_with(g, cfg.exact_cap, cfg.exact_nodes) {
        Ok((k, _)) => Some(k),
        Err(ColoringError::TooLarge { .. }) => None,
        Err(e) => return Some(capped(record, e.to_string())),
    };
    record.chi = chi;
    let result = match theorem {
        Theorem::TwoCycle => colorer_suite(g, chi, XV_BOUND, color_xv_free, cfg),
        Theorem::Tf3 => colorer_suite(g, chi, TF3_BOUND, color_triangle_3cycle_free, cfg),
        Theorem::K4f3 => colorer_suite(g, chi, K4F3_BOUND, color_k4_3cycle_free, cfg),
        Theorem::C3 => c3_suite(g, omega, chi, cfg),
        Theorem::NoDiamond => Ok(nodiamond_suite(g)),
        Theorem::TwoCycleStep2
        | Theorem::VCycle
        | Theorem::CrossingCycle
        | Theorem::NoDragonfly
        | Theorem::Butterfly => level_suite(theorem, g, cfg),
        Theorem::Scott => scott_suite(g, chi, cfg),
        Theorem::Hajos => hajos_suite(g, omega, chi, cfg),
    };
    match result {
        Ok(outcome) => {
            let ok = outcome.falsifications.is_empty() && outcome.violations.is_empty();
            record.status = if ok { Status::Pass } else { Status::Fail };
            record.bound_satisfied = ok;
            record.colors_used = outcome.colors_used;
            record.bound = outcome.bound;
            record.falsifications = outcome.falsifications;
            record.violations = outcome.violations;
            Some(record)
        }
        Err(Stop::Capped(reason)) => Some(capped(record, reason)),
    }
}

fn capped(mut record: GraphRecord, reason: String) -> GraphRecord {
    record.status = Status::Capped;
    record.bound_satisfied = false;
    record.capped = Some(reason);
    record
}

/// Membership tests that need no cycle search.
fn admits_cheaply(theorem: Theorem, g: &Graph, flags: &ClassFlags) -> bool {
    match theorem {
        Theorem::TwoCycleStep2 => flags.diamond_free,
        Theorem::VCycle | Theorem::CrossingCycle | Theorem::Tf3 => flags.triangle_free,
        Theorem::NoDragonfly | Theorem::Butterfly | Theorem::K4f3 => flags.k4_free,
        Theorem::Hajos => is_hajos_join(g).is_some(),
        _ => true,
    }
}

fn admits(theorem: Theorem, flags: &ClassFlags) -> bool {
    let yes = |f: Option<bool>| f == Some(true);
    match theorem {
        Theorem::TwoCycle | Theorem::NoDiamond | Theorem::TwoCycleStep2 => yes(flags.xv_free),
        Theorem::CrossingCycle => yes(flags.c3) && yes(flags.v_free),
        Theorem::VCycle
        | Theorem::NoDragonfly
        | Theorem::Butterfly
        | Theorem::Tf3
        | Theorem::K4f3
        | Theorem::C3 => yes(flags.c3),
        Theorem::Scott | Theorem::Hajos => true,
    }
}

fn is_hajos_join(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 5 || n.is_multiple_of(2) {
        return None;
    }
    let k = (n - 1) / 2;
    (hajos_join(k).ok()? == *g).then_some(k)
}

fn colorer_suite<F>(
    g: &Graph,
    chi: Option<usize>,
    bound: usize,
    colorer: F,
    cfg: &CampaignConfig,
) -> Result<Outcome, Stop>
where
    F: Fn(&Graph, &ColorConfig) -> Result<Coloring, ColoringError>,
{
    let mut out = Outcome {
        bound: Some(bound),
        ..Outcome::default()
    };
    if let Some(chi) = chi.filter(|&c| c > bound) {
        out.violations
            .push(Violation::ChromaticAboveBound { chi, bound });
    }
    let result = colorer(g, &cfg.color_config());
    check_coloring(g, bound, result, &mut out)?;
    Ok(out)
}

fn check_coloring(
    g: &Graph,
    bound: usize,
    result: Result<Coloring, ColoringError>,
    out: &mut Outcome,
) -> Result<(), Stop> {
    match result {
        Ok(c) => {
            let used = c.colors_used();
            out.colors_used = Some(used);
            let proper = c.colors.len() == g.n() && verify_coloring(g, &c).unwrap_or(false);
            if !proper || c.palette > bound {
                out.violations
                    .push(Violation::ImproperColoring { coloring: c });
            } else if used > bound {
                out.violations.push(Violation::BoundExceeded {
                    colors_used: used,
                    bound,
                });
            }
        }
        Err(e) => record_error(e, out)?,
    }
    Ok(())
}

fn record_error(e: ColoringError, out: &mut Outcome) -> Result<(), Stop> {
    if let Some(report) = e.falsification() {
        if report.verify() {
            out.falsifications.push(report.clone());
        } else {
            out.violations.push(Violation::UnverifiedWitness {
                report: Box::new(report.clone()),
            });
        }
        return Ok(());
    }
    match e {
        ColoringError::Search(s) => Err(s.into()),
        ColoringError::TooLarge { .. } => Err(Stop::Capped(e.to_string())),
        other => {
            out.violations.push(Violation::ColorerError {
                message: other.to_string(),
            });
            Ok(())
        }
    }
}

fn c3_suite(
    g: &Graph,
    omega: usize,
    chi: Option<usize>,
    cfg: &CampaignConfig,
) -> Result<Outcome, Stop> {
    let bound = K4F3_BOUND.max(omega + 1);
    let mut out = Outcome {
        bound: Some(bound),
        ..Outcome::default()
    };
    if let Some(chi) = chi.filter(|&c| c > bound) {
        out.violations
            .push(Violation::ChromaticAboveBound { chi, bound });
    }
    let result = color_3cycle_free_with_stats(g, &cfg.color_config());
    let result = match result {
        Ok((c, stats)) => {
            if stats.max_depth > g.n() {
                out.violations.push(Violation::ReductionTooDeep {
                    depth: stats.max_depth,
                    n: g.n(),
                });
            }
            Ok(c)
        }
        Err(e) => Err(e),
    };
    check_coloring(g, bound, result, &mut out)?;
    Ok(out)
}

fn nodiamond_suite(g: &Graph) -> Outcome {
    let mut out = Outcome::default();
    match trichotomy(g) {
        Ok(tag) => {
            if !tag.verify(g) {
                out.violations.push(Violation::TagRejected {
                    tag: serde_json::to_string(&tag).unwrap_or_default(),
                });
            }
        }
        Err(DecomposeError::Falsified(report)) => out.falsifications.push(*report),
        Err(e) => out.violations.push(Violation::ColorerError {
            message: e.to_string(),
        }),
    }
    out
}

/// Checks every BFS level from every root for the substructure the lemma
/// excludes; stops at the first hit.
fn level_suite(theorem: Theorem, g: &Graph, cfg: &CampaignConfig) -> Result<Outcome, Stop> {
    let budget = cfg.search_budget();
    let mut out = Outcome::default();
    for root in 0..g.n() {
        let levels = g.bfs_levels(root).expect("root in range").levels;
        for (i, level) in levels.iter().enumerate() {
            let sub = g.induced(level);
            let h = &sub.graph;
            let at = LevelScope {
                scope: (0..g.n()).collect(),
                chain: vec![LevelRef { root, level: i }],
            };
            let lift_cycle = |w: CycleWitness| w.map_vertices(|v| sub.lift(v));
            let lift_embedding = |e: Vec<usize>| e.into_iter().map(|v| sub.lift(v)).collect();
            let found = match theorem {
                Theorem::TwoCycleStep2 => find_k_chord_cycle(h, 1, budget)?.map(|w| {
                    (
                        TheoremId::TwoCycleStep2,
                        Witness::LevelCycle {
                            at,
                            defect: CycleDefect::OneChord,
                            cycle: lift_cycle(w),
                        },
                    )
                }),
                Theorem::VCycle => {
                    find_two_chord_cycle_of_kind(h, TwoChordKind::V, budget)?.map(|w| {
                        (
                            TheoremId::VCycle,
                            Witness::LevelCycle {
                                at,
                                defect: CycleDefect::VCycle,
                                cycle: lift_cycle(w),
                            },
                        )
                    })
                }
                Theorem::CrossingCycle => find_crossing_or_v_cycle(h, budget)?.map(|w| {
                    (
                        TheoremId::CrossingCycle,
                        Witness::LevelCycle {
                            at,
                            defect: CycleDefect::CrossingOrV,
                            cycle: lift_cycle(w),
                        },
                    )
                }),
                Theorem::NoDragonfly | Theorem::Butterfly => {
                    let (id, pattern) = if theorem == Theorem::NoDragonfly {
                        (TheoremId::NoDragonfly, PatternName::Dragonfly)
                    } else {
                        (TheoremId::Butterfly, PatternName::Butterfly)
                    };
                    find_induced_pattern(h, pattern).map(|e| {
                        (
                            id,
                            Witness::LevelPattern {
                                at,
                                pattern,
                                embedding: lift_embedding(e),
                            },
                        )
                    })
                }
                _ => unreachable!("not a level lemma"),
            };
            if let Some((id, witness)) = found {
                let report = FalsificationReport::new(id, g, witness);
                if report.verify() {
                    out.falsifications.push(report);
                } else {
                    out.violations.push(Violation::UnverifiedWitness {
                        report: Box::new(report),
                    });
                }
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// `χ(G) ≤ max_even χ(S_i) + max_odd χ(S_j)` for every root.
fn scott_suite(g: &Graph, chi: Option<usize>, cfg: &CampaignConfig) -> Result<Outcome, Stop> {
    let chi = chi.ok_or_else(|| Stop::Capped("graph exceeds the exact search cap".into()))?;
    let mut out = Outcome::default();
    for root in 0..g.n() {
        let levels = g.bfs_levels(root).expect("root in range").levels;
        let mut max = [0usize; 2];
        for (i, level) in levels.iter().enumerate() {
            let sub = g.induced(level);
            let (k, _) = exact_chromatic_number_with(&sub.graph, cfg.exact_cap, cfg.exact_nodes)
                .map_err(|e| Stop::Capped(e.to_string()))?;
            max[i % 2] = max[i % 2].max(k);
        }
        if chi > max[0] + max[1] {
            out.violations.push(Violation::ScottInequality {
                root,
                chi,
                even_max: max[0],
                odd_max: max[1],
            });
        }
    }
    Ok(out)
}

/// `ω = k`, `χ = k + 1`, no 3-chord cycle, and the large-clique colorer
/// stays within its bound.
fn hajos_suite(
    g: &Graph,
    omega: usize,
    chi: Option<usize>,
    cfg: &CampaignConfig,
) -> Result<Outcome, Stop> {
    let k = is_hajos_join(g).expect("admitted as a join");
    let mut out = Outcome::default();
    if omega != k {
        out.violations.push(Violation::HajosClique { k, omega });
    }
    let chi = chi.ok_or_else(|| Stop::Capped("graph exceeds the exact search cap".into()))?;
    if chi != k + 1 {
        out.violations.push(Violation::HajosChromatic { k, chi });
    }
    if let Some(cycle) = find_k_chord_cycle(g, 3, cfg.search_budget())? {
        out.violations
            .push(Violation::HajosThreeChordCycle { cycle });
        return Ok(out);
    }
    let c3 = c3_suite(g, omega, Some(chi), cfg)?;
    out.colors_used = c3.colors_used;
    out.bound = c3.bound;
    out.falsifications = c3.falsifications;
    out.violations.extend(c3.violations);
    Ok(out)
}
