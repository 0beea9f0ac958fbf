//! `chordcycle`: detectors, colorers and verification campaigns from the
//! command line.
//!
//! Exit codes:
//!
//! | command  | 0         | 1            | 2            | 3     | 4             |
//! |----------|-----------|--------------|--------------|-------|---------------|
//! | `detect` | witness   | absent       | budget       | usage |               |
//! | `color`  | colored   | out of class | budget       | usage | falsification |
//! | `chi`    | χ found   |              | cap or limit | usage |               |
//! | `verify` | clean     | failures     |              | usage |               |
//! | `gen`    | written   |              |              | usage |               |

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chordcycle::campaign::{
    config_from_report, run_campaign, source_graphs, CampaignConfig, Source, Theorem,
};
use chordcycle::coloring::{
    color_3cycle_free, color_k4_3cycle_free, color_triangle_3cycle_free, color_xv_free,
    exact_chromatic_number_with, ColorConfig, ColoringError, DEFAULT_EXACT_CAP,
    DEFAULT_EXACT_NODES,
};
use chordcycle::detectors::{
    cycle_profile, find_crossing_or_v_cycle, find_induced_pattern, find_k_chord_cycle,
    find_two_chord_cycle_of_kind, PatternName, SearchBudget, SearchError, TwoChordKind,
};
use chordcycle::generators::{hajos_join, named_graph};
use chordcycle::io::{looks_like_edge_list, parse_edge_list, parse_graph6, to_graph6};
use chordcycle::Graph;

const USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chordcycle",
    version,
    about = "Chorded-cycle detectors, bounded colorers and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Look for a chorded cycle or an induced pattern.
    Detect(DetectArgs),
    /// Color a graph with one of the constructive colorers.
    Color(ColorArgs),
    /// Exact chromatic number with an optimal coloring.
    Chi(ChiArgs),
    /// Run a theorem's property suite over a stream of graphs.
    Verify(VerifyArgs),
    /// Write graphs from a source as graph6 lines.
    Gen(GenArgs),
}

#[derive(Args)]
struct InputArgs {
    /// graph6 string, graph6 or edge-list file, or `-` for standard input.
    #[arg(long, conflicts_with = "named", required_unless_present = "named")]
    input: Option<String>,
    /// A named graph: Cn, Kn, Pn, Petersen, Diamond, Dragonfly, Butterfly or hajos:k.
    #[arg(long)]
    named: Option<String>,
}

#[derive(Args)]
struct DetectArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Find a cycle with exactly this many chords.
    #[arg(long, group = "query")]
    k_chords: Option<usize>,
    /// Find an induced copy of a pattern (triangle, k4, diamond, dragonfly, butterfly, k1,2,2).
    #[arg(long, group = "query")]
    pattern: Option<String>,
    /// Find a 2-chord cycle of a kind: v, x, parallel, or xv for either of v and x.
    #[arg(long, group = "query")]
    kind: Option<String>,
    /// Partial-path budget for the cycle search.
    #[arg(long)]
    budget: Option<u64>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorTheorem {
    #[value(name = "2cycle")]
    TwoCycle,
    Tf3,
    K4f3,
    C3,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    theorem: ColorTheorem,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChiArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest graph the exact search accepts.
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    cap: usize,
    /// Node limit of the exact search.
    #[arg(long, default_value_t = DEFAULT_EXACT_NODES)]
    nodes: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "replay")]
    theorem: Option<String>,
    /// enum:N, enum:A-B, random:n,p,count,seed, file:PATH or builtin.
    #[arg(long, required_unless_present = "replay")]
    source: Option<String>,
    /// Re-run the campaign whose report is in this file.
    #[arg(long, conflicts_with_all = ["theorem", "source", "seed", "budget"])]
    replay: Option<PathBuf>,
    /// Replaces the seed of a random source.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// JSON Lines report; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// enum:N, enum:A-B, random:n,p,count,seed, file:PATH or builtin.
    #[arg(long, conflicts_with = "named", required_unless_present = "named")]
    source: Option<String>,
    #[arg(long)]
    named: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Keep only graphs in a class: connected, c1, c2, c3, xv, triangle-free, k4-free.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: USAGE,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Detect(a) => detect(a),
        Command::Color(a) => color(a),
        Command::Chi(a) => chi(a),
        Command::Verify(a) => verify(a),
        Command::Gen(a) => generate(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("chordcycle: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn budget(flag: Option<u64>) -> SearchBudget {
    flag.map_or_else(SearchBudget::from_env, SearchBudget::new)
}

fn read_graph(args: &InputArgs) -> Result<Graph, Failure> {
    if let Some(name) = &args.named {
        return named(name);
    }
    let input = args.input.as_deref().expect("required by clap");
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        s
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| Failure::usage(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    let parsed = if looks_like_edge_list(&text) {
        parse_edge_list(&text)
    } else {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .unwrap_or("");
        parse_graph6(line)
    };
    parsed.map_err(|e| Failure::usage(format!("bad graph input: {e}")))
}

fn named(name: &str) -> Result<Graph, Failure> {
    let graph = match name.strip_prefix("hajos:") {
        Some(k) => k
            .parse()
            .map_err(|_| Failure::usage(format!("bad Hajós order `{k}`")))
            .and_then(|k| hajos_join(k).map_err(Failure::usage)),
        None => named_graph(name).map_err(Failure::usage),
    };
    graph
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                Failure::usage(format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(out: Option<&Path>, value: &serde_json::Value) -> Result<(), Failure> {
    let mut w = sink(out)?;
    writeln!(w, "{value}")
        .and_then(|_| w.flush())
        .map_err(|e| Failure::usage(format!("write: {e}")))
}

fn budget_failure(e: SearchError) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn detect(a: DetectArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.input)?;
    let b = budget(a.budget);
    let out = a.out.as_deref();
    let witness = if let Some(k) = a.k_chords {
        find_k_chord_cycle(&g, k, b)
            .map_err(budget_failure)?
            .map(|w| json!({ "query": format!("{k}-chord cycle"), "cycle": w }))
    } else if let Some(p) = &a.pattern {
        let p: PatternName = p.parse().map_err(Failure::usage)?;
        find_induced_pattern(&g, p)
            .map(|e| json!({ "query": "induced pattern", "pattern": p, "embedding": e }))
    } else if let Some(kind) = &a.kind {
        let found = if kind.eq_ignore_ascii_case("xv") {
            find_crossing_or_v_cycle(&g, b)
        } else {
            let k: TwoChordKind = kind.parse().map_err(Failure::usage)?;
            find_two_chord_cycle_of_kind(&g, k, b)
        };
        found
            .map_err(budget_failure)?
            .map(|w| json!({ "query": format!("{kind} 2-chord cycle"), "cycle": w }))
    } else {
        return Err(Failure::usage(
            "one of --k-chords, --pattern or --kind is required",
        ));
    };
    match witness {
        Some(w) => {
            emit(out, &w)?;
            Ok(0)
        }
        None => {
            let mut w = sink(out)?;
            writeln!(w, "absent")
                .and_then(|_| w.flush())
                .map_err(|e| Failure::usage(format!("write: {e}")))?;
            Ok(1)
        }
    }
}

fn color(a: ColorArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.input)?;
    let cfg = ColorConfig {
        budget: budget(a.budget),
        ..ColorConfig::default()
    };
    let (name, result) = match a.theorem {
        ColorTheorem::TwoCycle => ("2cycle", color_xv_free(&g, &cfg)),
        ColorTheorem::Tf3 => ("tf3", color_triangle_3cycle_free(&g, &cfg)),
        ColorTheorem::K4f3 => ("k4f3", color_k4_3cycle_free(&g, &cfg)),
        ColorTheorem::C3 => ("c3", color_3cycle_free(&g, &cfg)),
    };
    let out = a.out.as_deref();
    match result {
        Ok(c) => {
            emit(
                out,
                &json!({ "theorem": name, "colors_used": c.colors_used(), "coloring": c }),
            )?;
            Ok(0)
        }
        Err(e) => {
            if let Some(report) = e.falsification() {
                emit(out, &json!({ "theorem": name, "falsification": report }))?;
                eprintln!("chordcycle: {e}");
                return Ok(4);
            }
            match e {
                ColoringError::OutOfClass { class, witness } => {
                    emit(
                        out,
                        &json!({ "theorem": name, "refused": format!("input is not {class}"), "witness": witness }),
                    )?;
                    Ok(1)
                }
                ColoringError::Search(s) => Err(budget_failure(s)),
                ColoringError::TooLarge { .. } => Err(Failure {
                    code: 2,
                    message: e.to_string(),
                }),
                other => Err(Failure::usage(other)),
            }
        }
    }
}

fn chi(a: ChiArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.input)?;
    match exact_chromatic_number_with(&g, a.cap, a.nodes) {
        Ok((k, c)) => {
            emit(a.out.as_deref(), &json!({ "chi": k, "coloring": c }))?;
            Ok(0)
        }
        Err(e @ (ColoringError::TooLarge { .. } | ColoringError::Search(_))) => Err(Failure {
            code: 2,
            message: e.to_string(),
        }),
        Err(e) => Err(Failure::usage(e)),
    }
}

fn with_seed(source: Source, seed: Option<u64>) -> Source {
    match (source, seed) {
        (Source::Random { n, p, count, .. }, Some(seed)) => Source::Random { n, p, count, seed },
        (s, _) => s,
    }
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let cfg = match &a.replay {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            config_from_report(&text).map_err(Failure::usage)?
        }
        None => {
            let theorem: Theorem = a
                .theorem
                .as_deref()
                .expect("required by clap")
                .parse()
                .map_err(Failure::usage)?;
            let source: Source = a
                .source
                .as_deref()
                .expect("required by clap")
                .parse()
                .map_err(Failure::usage)?;
            let mut cfg = CampaignConfig::new(theorem, with_seed(source, a.seed));
            if let Some(b) = a.budget {
                cfg.budget = b;
            }
            cfg
        }
    };
    let out = sink(a.out.as_deref())?;
    let s = run_campaign(&cfg, a.jobs, out).map_err(Failure::usage)?;
    eprintln!(
        "{} on {}: {} examined, {} in class ({}), {} passed, {} failed, {} capped, {} falsifications, max χ {}, {} ms",
        cfg.theorem,
        cfg.source,
        s.examined,
        s.in_class,
        cfg.theorem.class_description(),
        s.passed,
        s.failed,
        s.capped,
        s.falsifications,
        s.max_chi
            .c1
            .into_iter()
            .chain([s.max_chi.c2, s.max_chi.c3].into_iter().flatten())
            .max()
            .map_or("-".to_string(), |k| k.to_string()),
        s.runtime_ms,
    );
    Ok(if s.clean() { 0 } else { 1 })
}

fn in_class(g: &Graph, filter: &str, b: SearchBudget) -> Result<bool, Failure> {
    let profile = || cycle_profile(g, b).map_err(budget_failure);
    Ok(match filter {
        "connected" => g.is_connected(),
        "c1" => profile()?.in_class(1),
        "c2" => profile()?.in_class(2),
        "c3" => profile()?.in_class(3),
        "xv" => profile()?.xv_free(),
        "triangle-free" => find_induced_pattern(g, PatternName::Triangle).is_none(),
        "k4-free" => find_induced_pattern(g, PatternName::K4).is_none(),
        other => return Err(Failure::usage(format!("unknown filter `{other}`"))),
    })
}

fn generate(a: GenArgs) -> Result<u8, Failure> {
    let b = budget(a.budget);
    let graphs: Box<dyn Iterator<Item = Result<Graph, Failure>>> = match (&a.named, &a.source) {
        (Some(name), _) => Box::new(std::iter::once(named(name))),
        (None, Some(s)) => {
            let source = with_seed(s.parse().map_err(Failure::usage)?, a.seed);
            Box::new(
                source_graphs(&source)
                    .map_err(Failure::usage)?
                    .map(|g| g.map_err(Failure::usage)),
            )
        }
        (None, None) => unreachable!("required by clap"),
    };
    let mut out = sink(a.out.as_deref())?;
    let mut kept = 0u64;
    let mut dropped = 0u64;
    for g in graphs {
        let g = g?;
        if let Some(f) = &a.filter {
            if !in_class(&g, f, b)? {
                dropped += 1;
                continue;
            }
        }
        kept += 1;
        writeln!(out, "{}", to_graph6(&g)).map_err(|e| Failure::usage(format!("write: {e}")))?;
    }
    out.flush()
        .map_err(|e| Failure::usage(format!("write: {e}")))?;
    if a.filter.is_some() {
        eprintln!("kept {kept}, rejected {dropped}");
    }
    Ok(0)
}
