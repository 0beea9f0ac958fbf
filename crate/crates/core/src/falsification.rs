//! Structured reports for runtime observations that contradict one of the
//! structural lemmas the colorers rely on. Every report embeds its graph and
//! a witness that [`FalsificationReport::verify`] re-checks from scratch.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::coloring::exact::chromatic_number_within;
use crate::coloring::three_chord::clique_structure_failure;
use crate::decompose::HittingSet;
use crate::detectors::{
    is_induced_embedding, max_clique_within, CycleWitness, PatternName, TwoChordKind,
};
use crate::graph::{Graph, InducedSubgraph};
use crate::io::{parse_graph6, to_graph6};

/// The step-4 claims of the large-clique reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliqueClaim {
    /// Every neighbor of the clique sees 1 or ω-1 of its vertices.
    DegDansK,
    /// Exactly one index `i` has `S_i ∪ T_i` nonempty.
    Ui,
    /// `T_1` has at least two members.
    MinDeg,
    /// `T_1` is stable.
    Connection,
    /// `N(T_1) ⊆ S_1 ∪ K`.
    Twin,
    /// `N(t) = S_1 ∪ K - x_1` for each `t` in `T_1`.
    Final,
}

impl CliqueClaim {
    pub fn as_str(self) -> &'static str {
        match self {
            CliqueClaim::DegDansK => "degdansK",
            CliqueClaim::Ui => "U_i",
            CliqueClaim::MinDeg => "mindeg",
            CliqueClaim::Connection => "connection",
            CliqueClaim::Twin => "twin",
            CliqueClaim::Final => "final",
        }
    }

    const ALL: [CliqueClaim; 6] = [
        CliqueClaim::DegDansK,
        CliqueClaim::Ui,
        CliqueClaim::MinDeg,
        CliqueClaim::Connection,
        CliqueClaim::Twin,
        CliqueClaim::Final,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    OneCycle,
    NoDiamond,
    TwoCycleStep2,
    VCycle,
    CrossingCycle,
    NoDragonfly,
    Butterfly,
    /// A triangle inside the hitting set of a level, with neither a
    /// dragonfly nor a butterfly present.
    DragonOrButter,
    CliqueReduction(CliqueClaim),
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::OneCycle => "1-cycle",
            TheoremId::NoDiamond => "nodiamond",
            TheoremId::TwoCycleStep2 => "2-cycleStep2",
            TheoremId::VCycle => "vcycle",
            TheoremId::CrossingCycle => "crossingcycle",
            TheoremId::NoDragonfly => "nodragonfly",
            TheoremId::Butterfly => "butterfly",
            TheoremId::DragonOrButter => "dragonorbutter",
            TheoremId::CliqueReduction(c) => return write!(f, "3-cycleclique4:{}", c.as_str()),
        };
        f.write_str(s)
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "1-cycle" => TheoremId::OneCycle,
            "nodiamond" => TheoremId::NoDiamond,
            "2-cycleStep2" => TheoremId::TwoCycleStep2,
            "vcycle" => TheoremId::VCycle,
            "crossingcycle" => TheoremId::CrossingCycle,
            "nodragonfly" => TheoremId::NoDragonfly,
            "butterfly" => TheoremId::Butterfly,
            "dragonorbutter" => TheoremId::DragonOrButter,
            other => {
                let claim = other
                    .strip_prefix("3-cycleclique4:")
                    .and_then(|c| CliqueClaim::ALL.into_iter().find(|k| k.as_str() == c))
                    .ok_or_else(|| format!("unknown theorem id `{s}`"))?;
                TheoremId::CliqueReduction(claim)
            }
        })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One breadth-first step: the vertices at distance `level` from `root`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRef {
    pub root: usize,
    pub level: usize,
}

/// A vertex set reached from `scope` by repeatedly taking a BFS level of the
/// subgraph induced by the current set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelScope {
    pub scope: Vec<usize>,
    pub chain: Vec<LevelRef>,
}

impl LevelScope {
    pub fn whole(g: &Graph) -> Self {
        LevelScope {
            scope: (0..g.n()).collect(),
            chain: Vec::new(),
        }
    }

    pub fn resolve(&self, g: &Graph) -> Option<VertexSet> {
        if self.scope.iter().any(|&v| v >= g.n()) {
            return None;
        }
        let mut w = VertexSet::from_iter_with_capacity(g.n(), self.scope.iter().copied());
        for step in &self.chain {
            if step.root >= g.n() || !w.contains(step.root) {
                return None;
            }
            w = g
                .bfs_levels_within(step.root, &w)
                .into_iter()
                .nth(step.level)?;
        }
        Some(w)
    }

    fn lift(&mut self, sub: &InducedSubgraph) {
        for v in &mut self.scope {
            *v = sub.lift(*v);
        }
        for step in &mut self.chain {
            step.root = sub.lift(step.root);
        }
    }

    fn through_level(&mut self, level: &InducedSubgraph, host_n: usize, root: usize, index: usize) {
        let whole = self.scope.len() == level.graph.n();
        self.lift(level);
        if whole {
            self.scope = (0..host_n).collect();
            self.chain.insert(0, LevelRef { root, level: index });
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleDefect {
    OneChord,
    VCycle,
    CrossingOrV,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A level needing more colors than allowed.
    LevelChromatic {
        at: LevelScope,
        clique_number: usize,
        chromatic_number: usize,
        bound: usize,
    },
    /// A level containing a forbidden chorded cycle.
    LevelCycle {
        at: LevelScope,
        defect: CycleDefect,
        cycle: CycleWitness,
    },
    /// A level containing an induced copy of a pattern.
    LevelPattern {
        at: LevelScope,
        pattern: PatternName,
        embedding: Vec<usize>,
    },
    /// An induced diamond in a graph with no clique cutset that is not
    /// complete tripartite.
    InducedDiamond {
        scope: Vec<usize>,
        embedding: Vec<usize>,
    },
    /// A triangle inside a minimal triangle hitting set of a level.
    HittingSetTriangle {
        at: LevelScope,
        hitting_set: Vec<usize>,
        triangle: [usize; 3],
    },
    /// A failed structural claim around maximum clique `clique` of
    /// `G[scope]`; `vertices` are the offending vertices.
    CliqueStructure {
        claim: &'static str,
        scope: Vec<usize>,
        clique: Vec<usize>,
        vertices: Vec<usize>,
    },
}

impl Witness {
    fn at_mut(&mut self) -> Option<&mut LevelScope> {
        match self {
            Witness::LevelChromatic { at, .. }
            | Witness::LevelCycle { at, .. }
            | Witness::LevelPattern { at, .. }
            | Witness::HittingSetTriangle { at, .. } => Some(at),
            _ => None,
        }
    }

    pub(crate) fn lift(&mut self, sub: &InducedSubgraph) {
        match self.at_mut() {
            Some(at) => at.lift(sub),
            None => self.lift_plain_scope(sub),
        }
        self.lift_payload(sub);
    }

    pub(crate) fn through_level(
        &mut self,
        level: &InducedSubgraph,
        host_n: usize,
        root: usize,
        index: usize,
    ) {
        match self.at_mut() {
            Some(at) => at.through_level(level, host_n, root, index),
            None => self.lift_plain_scope(level),
        }
        self.lift_payload(level);
    }

    fn lift_plain_scope(&mut self, sub: &InducedSubgraph) {
        if let Witness::InducedDiamond { scope, .. } | Witness::CliqueStructure { scope, .. } = self
        {
            scope.iter_mut().for_each(|v| *v = sub.lift(*v));
        }
    }

    /// Lifts every id outside the level scope.
    fn lift_payload(&mut self, sub: &InducedSubgraph) {
        let map = |v: &mut usize| *v = sub.lift(*v);
        match self {
            Witness::LevelChromatic { .. } => {}
            Witness::LevelCycle { cycle, .. } => *cycle = cycle.map_vertices(|v| sub.lift(v)),
            Witness::LevelPattern { embedding, .. } => embedding.iter_mut().for_each(map),
            Witness::InducedDiamond { embedding, .. } => embedding.iter_mut().for_each(map),
            Witness::HittingSetTriangle {
                hitting_set,
                triangle,
                ..
            } => {
                hitting_set.iter_mut().for_each(map);
                triangle.iter_mut().for_each(map);
            }
            Witness::CliqueStructure {
                clique, vertices, ..
            } => {
                clique.iter_mut().for_each(map);
                vertices.iter_mut().for_each(map);
            }
        }
    }

    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let inside = |w: &VertexSet, vs: &[usize]| vs.iter().all(|&v| v < n && w.contains(v));
        match self {
            Witness::LevelChromatic {
                at,
                clique_number: omega,
                chromatic_number,
                bound,
            } => {
                let Some(w) = at.resolve(g) else { return false };
                if chromatic_number <= bound || max_clique_within(g, &w).0 != *omega {
                    return false;
                }
                matches!(chromatic_number_within(g, &w), Ok(chi) if chi == *chromatic_number)
            }
            Witness::LevelCycle { at, defect, cycle } => {
                let Some(w) = at.resolve(g) else { return false };
                if !inside(&w, &cycle.cycle) || !cycle.is_valid(g) {
                    return false;
                }
                match defect {
                    CycleDefect::OneChord => cycle.chord_count() == 1,
                    CycleDefect::VCycle => cycle.two_chord_kind() == Some(TwoChordKind::V),
                    CycleDefect::CrossingOrV => {
                        matches!(
                            cycle.two_chord_kind(),
                            Some(TwoChordKind::V | TwoChordKind::X)
                        )
                    }
                }
            }
            Witness::LevelPattern {
                at,
                pattern,
                embedding,
            } => {
                let Some(w) = at.resolve(g) else { return false };
                inside(&w, embedding) && is_induced_embedding(g, &pattern.graph(), embedding)
            }
            Witness::InducedDiamond { scope, embedding } => {
                scope.iter().all(|&v| v < n)
                    && embedding.iter().all(|v| scope.contains(v))
                    && is_induced_embedding(g, &PatternName::Diamond.graph(), embedding)
            }
            Witness::HittingSetTriangle {
                at,
                hitting_set,
                triangle,
            } => {
                let Some(w) = at.resolve(g) else { return false };
                if !inside(&w, hitting_set) {
                    return false;
                }
                let t = VertexSet::from_iter_with_capacity(n, hitting_set.iter().copied());
                let [a, b, c] = *triangle;
                HittingSet {
                    vertices: t.clone(),
                }
                .verify_within(g, &w)
                    && inside(&t, triangle)
                    && g.has_edge(a, b)
                    && g.has_edge(b, c)
                    && g.has_edge(a, c)
            }
            Witness::CliqueStructure {
                claim,
                scope,
                clique,
                vertices,
            } => {
                if scope.iter().any(|&v| v >= n) || clique.iter().any(|&v| v >= n) {
                    return false;
                }
                let w = VertexSet::from_iter_with_capacity(n, scope.iter().copied());
                let k = VertexSet::from_iter_with_capacity(n, clique.iter().copied());
                matches!(clique_structure_failure(g, &w, &k), Some((c, vs)) if c.as_str() == *claim && vs == *vertices)
            }
        }
    }
}

/// A contradiction observed at runtime, with the graph it happened on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FalsificationReport {
    pub theorem_id: TheoremId,
    pub graph6: String,
    pub witness: Witness,
}

impl FalsificationReport {
    pub fn new(theorem_id: TheoremId, g: &Graph, witness: Witness) -> Self {
        FalsificationReport {
            theorem_id,
            graph6: to_graph6(g),
            witness,
        }
    }

    /// Parses the embedded graph and re-checks the witness.
    pub fn verify(&self) -> bool {
        match parse_graph6(&self.graph6) {
            Ok(g) => self.witness.verify(&g),
            Err(_) => false,
        }
    }

    /// Moves the report from `sub.graph` to its host.
    pub(crate) fn lift(mut self, sub: &InducedSubgraph, host: &Graph) -> Self {
        self.witness.lift(sub);
        self.graph6 = to_graph6(host);
        self
    }

    /// Moves the report from the graph of BFS level `index` (from `root`) to
    /// the host the level was taken in.
    pub(crate) fn through_level(
        mut self,
        level: &InducedSubgraph,
        host: &Graph,
        root: usize,
        index: usize,
    ) -> Self {
        self.witness.through_level(level, host.n(), root, index);
        self.graph6 = to_graph6(host);
        self
    }
}

impl fmt::Display for FalsificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.theorem_id, self.graph6)
    }
}
