//! Verification campaigns: run one theorem's property suite over a stream
//! of graphs and report the outcome as JSON Lines.
//!
//! A report holds one `graph` record per in-class graph, in stream order,
//! followed by a single `summary` record embedding the configuration that
//! produced it.

mod exec;
mod suites;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::coloring::{ColorConfig, DEFAULT_EXACT_CAP, DEFAULT_EXACT_NODES};
use crate::detectors::SearchBudget;
use crate::falsification::FalsificationReport;
use crate::generators::{GeneratorError, MAX_ENUMERATION_N};
use crate::graph::GraphError;

pub use exec::{run_campaign, run_campaign_sequential, source_graphs};
pub use suites::{evaluate, ClassFlags, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// (X, V)-free graphs are 6-colorable.
    TwoCycle,
    NoDiamond,
    TwoCycleStep2,
    VCycle,
    CrossingCycle,
    NoDragonfly,
    Butterfly,
    /// Triangle-free graphs without 3-chord cycles: 24 colors.
    Tf3,
    /// K4-free graphs without 3-chord cycles: 96 colors.
    K4f3,
    /// Graphs without 3-chord cycles: `max(96, ω + 1)` colors.
    C3,
    Scott,
    Hajos,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::TwoCycle,
        Theorem::NoDiamond,
        Theorem::TwoCycleStep2,
        Theorem::VCycle,
        Theorem::CrossingCycle,
        Theorem::NoDragonfly,
        Theorem::Butterfly,
        Theorem::Tf3,
        Theorem::K4f3,
        Theorem::C3,
        Theorem::Scott,
        Theorem::Hajos,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::TwoCycle => "2cycle",
            Theorem::NoDiamond => "nodiamond",
            Theorem::TwoCycleStep2 => "2-cycleStep2",
            Theorem::VCycle => "vcycle",
            Theorem::CrossingCycle => "crossingcycle",
            Theorem::NoDragonfly => "nodragonfly",
            Theorem::Butterfly => "butterfly",
            Theorem::Tf3 => "tf3",
            Theorem::K4f3 => "k4f3",
            Theorem::C3 => "c3",
            Theorem::Scott => "scott",
            Theorem::Hajos => "hajos",
        }
    }

    /// The class a graph must belong to for the suite to run on it.
    pub fn class_description(self) -> &'static str {
        match self {
            Theorem::TwoCycle | Theorem::NoDiamond => "connected, (X, V)-free",
            Theorem::TwoCycleStep2 => "connected, (diamond, X, V)-free",
            Theorem::VCycle | Theorem::Tf3 => "connected, triangle-free, no 3-chord cycle",
            Theorem::CrossingCycle => "connected, triangle-free, V-free, no 3-chord cycle",
            Theorem::NoDragonfly | Theorem::Butterfly | Theorem::K4f3 => {
                "connected, K4-free, no 3-chord cycle"
            }
            Theorem::C3 => "connected, no 3-chord cycle",
            Theorem::Scott => "connected",
            Theorem::Hajos => "Hajós joins of two cliques",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = CampaignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str().to_ascii_lowercase() == key)
            .or(match key.as_str() {
                "2cyclestep2" => Some(Theorem::TwoCycleStep2),
                "2-cycle" | "xv" => Some(Theorem::TwoCycle),
                _ => None,
            })
            .ok_or_else(|| CampaignError::UnknownTheorem(s.to_string()))
    }
}

/// Where a campaign's graphs come from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    /// Every labeled graph on `min..=max` vertices.
    Enumerate { min: usize, max: usize },
    /// `count` samples of G(n, p) keyed by `seed`.
    Random {
        n: usize,
        p: f64,
        count: u64,
        seed: u64,
    },
    /// graph6 lines; `-` reads standard input.
    File(PathBuf),
    /// Hajós joins for k = 2..7 followed by a few named graphs.
    Builtin,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Enumerate { min, max } if min == max => write!(f, "enum:{min}"),
            Source::Enumerate { min, max } => write!(f, "enum:{min}-{max}"),
            Source::Random { n, p, count, seed } => write!(f, "random:{n},{p},{count},{seed}"),
            Source::File(path) => write!(f, "file:{}", path.display()),
            Source::Builtin => f.write_str("builtin"),
        }
    }
}

impl FromStr for Source {
    type Err = CampaignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CampaignError::BadSource(s.to_string());
        let s = s.trim();
        if s == "builtin" {
            return Ok(Source::Builtin);
        }
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "enum" => {
                let (min, max) = match rest.split_once('-') {
                    Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                    None => {
                        let n = rest.parse().map_err(|_| bad())?;
                        (n, n)
                    }
                };
                if min > max {
                    return Err(bad());
                }
                if max > MAX_ENUMERATION_N {
                    return Err(GeneratorError::TooLarge {
                        n: max,
                        max: MAX_ENUMERATION_N,
                    }
                    .into());
                }
                Ok(Source::Enumerate { min, max })
            }
            "random" => {
                let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
                let [n, p, count, seed] = parts[..] else {
                    return Err(bad());
                };
                let p: f64 = p.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(GeneratorError::BadProbability(p).into());
                }
                Ok(Source::Random {
                    n: n.parse().map_err(|_| bad())?,
                    p,
                    count: count.parse().map_err(|_| bad())?,
                    seed: seed.parse().map_err(|_| bad())?,
                })
            }
            "file" if !rest.is_empty() => Ok(Source::File(PathBuf::from(rest))),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Source {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Source {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Theorem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Everything that determines a report's contents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub theorem: Theorem,
    pub source: Source,
    /// Partial-path budget for each cycle search.
    pub budget: u64,
    /// Node limit for each exact chromatic search.
    pub exact_nodes: u64,
    pub exact_cap: usize,
}

impl CampaignConfig {
    /// Budget from `CHORDCYCLE_BUDGET` or the default.
    pub fn new(theorem: Theorem, source: Source) -> Self {
        CampaignConfig {
            theorem,
            source,
            budget: SearchBudget::from_env().max_partial_paths,
            exact_nodes: DEFAULT_EXACT_NODES,
            exact_cap: DEFAULT_EXACT_CAP,
        }
    }

    pub fn search_budget(&self) -> SearchBudget {
        SearchBudget::new(self.budget)
    }

    pub(crate) fn color_config(&self) -> ColorConfig {
        ColorConfig {
            budget: self.search_budget(),
            exact_nodes: self.exact_nodes,
            exact_cap: self.exact_cap,
            verify_input: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A search hit its budget; counted neither as pass nor as fail.
    Capped,
}

/// The outcome of one suite on one in-class graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    /// Position in the source stream.
    pub index: u64,
    pub graph6: String,
    pub n: usize,
    pub status: Status,
    pub classes: ClassFlags,
    pub omega: usize,
    pub chi: Option<usize>,
    /// Colors used by the constructive colorer, for the coloring theorems.
    pub colors_used: Option<usize>,
    pub bound: Option<usize>,
    pub bound_satisfied: bool,
    pub falsifications: Vec<FalsificationReport>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capped: Option<String>,
}

/// Largest exact χ seen among recorded graphs of each class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MaxChi {
    pub c1: Option<usize>,
    pub c2: Option<usize>,
    pub c3: Option<usize>,
    pub xv_free: Option<usize>,
    pub triangle_free: Option<usize>,
    pub k4_free: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub config: CampaignConfig,
    /// Graphs drawn from the source.
    pub examined: u64,
    /// Graphs in the suite's class, one record each.
    pub in_class: u64,
    pub passed: u64,
    pub failed: u64,
    pub capped: u64,
    pub falsifications: u64,
    pub violations: u64,
    pub max_chi: MaxChi,
    pub max_colors_used: Option<usize>,
    /// Wall-clock time; the only field that differs between identical runs.
    pub runtime_ms: u64,
}

impl Summary {
    pub fn clean(&self) -> bool {
        self.failed == 0
    }
}

/// One line of a report.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum ReportLine<'a> {
    Graph(&'a GraphRecord),
    Summary(&'a Summary),
}

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error(
        "bad source {0:?}: expected enum:N, enum:A-B, random:n,p,count,seed, file:PATH or builtin"
    )]
    BadSource(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("graph {index} of the source: {source}")]
    Input { index: u64, source: GraphError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("report line: {0}")]
    Json(#[from] serde_json::Error),
    #[error("no summary record with a configuration found")]
    NoConfig,
    #[error("worker pool: {0}")]
    Pool(String),
}

/// The configuration embedded in a report's summary line.
pub fn config_from_report(report: &str) -> Result<CampaignConfig, CampaignError> {
    #[derive(Deserialize)]
    struct Line {
        record: String,
        config: Option<CampaignConfig>,
    }
    for text in report.lines().rev() {
        if text.trim().is_empty() {
            continue;
        }
        let line: Line = serde_json::from_str(text)?;
        if line.record == "summary" {
            return line.config.ok_or(CampaignError::NoConfig);
        }
    }
    Err(CampaignError::NoConfig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources_round_trip() {
        for text in [
            "enum:6",
            "enum:1-7",
            "random:12,0.3,100,7",
            "random:10,0,3,1",
            "file:graphs.g6",
            "builtin",
        ] {
            let s: Source = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!("enum:8".parse::<Source>().is_err());
        assert!("enum:5-3".parse::<Source>().is_err());
        assert!("random:12,1.5,1,1".parse::<Source>().is_err());
        assert!("random:12,0.5,1".parse::<Source>().is_err());
        assert!("graphs.g6".parse::<Source>().is_err());
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.as_str().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!(
            "2cyclestep2".parse::<Theorem>().unwrap(),
            Theorem::TwoCycleStep2
        );
        assert!("4cycle".parse::<Theorem>().is_err());
    }

    #[test]
    fn config_survives_json() {
        let cfg = CampaignConfig::new(Theorem::Scott, "random:12,0.3,100,7".parse().unwrap());
        let text = serde_json::to_string(&cfg).unwrap();
        let back: CampaignConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg);
    }
}
