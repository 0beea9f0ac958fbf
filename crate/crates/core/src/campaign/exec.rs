//! Campaign runners. Graphs are processed in chunks; within a chunk they
//! may be evaluated in parallel, and records are written in stream order,
//! so the report does not depend on the number of workers.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::time::Instant;

use crate::campaign::{
    evaluate, CampaignConfig, CampaignError, GraphRecord, MaxChi, ReportLine, Source, Status,
    Summary,
};
use crate::generators::{enumerate_labeled, graph6_lines, hajos_join, named_graph, random_stream};
use crate::graph::{Graph, GraphError};

const CHUNK: usize = 2048;

type GraphStream = Box<dyn Iterator<Item = Result<Graph, GraphError>> + Send>;

const BUILTIN_NAMES: [&str; 10] = [
    "C5",
    "C7",
    "C9",
    "K4",
    "K5",
    "P6",
    "Petersen",
    "Diamond",
    "Dragonfly",
    "Butterfly",
];

/// The graphs a source yields, in order.
pub fn source_graphs(source: &Source) -> Result<GraphStream, CampaignError> {
    Ok(match source {
        Source::Enumerate { min, max } => {
            let mut streams = Vec::new();
            for n in *min..=*max {
                streams.push(enumerate_labeled(n)?);
            }
            Box::new(streams.into_iter().flatten().map(Ok))
        }
        Source::Random { n, p, count, seed } => {
            Box::new(random_stream(*n, *p, *count, *seed)?.map(Ok))
        }
        Source::File(path) if path.as_os_str() == "-" => {
            Box::new(graph6_lines(BufReader::new(io::stdin())))
        }
        Source::File(path) => Box::new(graph6_lines(BufReader::new(File::open(path)?))),
        Source::Builtin => {
            let mut graphs: Vec<Graph> = (2..=7).map(|k| hajos_join(k).expect("k ≥ 2")).collect();
            graphs.extend(
                BUILTIN_NAMES
                    .iter()
                    .map(|s| named_graph(s).expect("known name")),
            );
            Box::new(graphs.into_iter().map(Ok))
        }
    })
}

/// Runs the campaign on a worker pool of `jobs` threads (0 for one per
/// core) and writes the report to `out`. Without the `parallel` feature
/// this is [`run_campaign_sequential`].
#[cfg(feature = "parallel")]
pub fn run_campaign<W: Write>(
    cfg: &CampaignConfig,
    jobs: usize,
    out: W,
) -> Result<Summary, CampaignError> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CampaignError::Pool(e.to_string()))?;
    drive(cfg, out, |chunk| {
        pool.install(|| {
            chunk
                .par_iter()
                .map(|(i, g)| evaluate(cfg.theorem, g, *i, cfg))
                .collect()
        })
    })
}

#[cfg(not(feature = "parallel"))]
pub fn run_campaign<W: Write>(
    cfg: &CampaignConfig,
    _jobs: usize,
    out: W,
) -> Result<Summary, CampaignError> {
    run_campaign_sequential(cfg, out)
}

/// Single-threaded runner; produces the same report as [`run_campaign`].
pub fn run_campaign_sequential<W: Write>(
    cfg: &CampaignConfig,
    out: W,
) -> Result<Summary, CampaignError> {
    drive(cfg, out, |chunk| {
        chunk
            .iter()
            .map(|(i, g)| evaluate(cfg.theorem, g, *i, cfg))
            .collect()
    })
}

fn drive<W, F>(cfg: &CampaignConfig, mut out: W, mut eval: F) -> Result<Summary, CampaignError>
where
    W: Write,
    F: FnMut(&[(u64, Graph)]) -> Vec<Option<GraphRecord>>,
{
    let start = Instant::now();
    let mut summary = Summary {
        config: cfg.clone(),
        examined: 0,
        in_class: 0,
        passed: 0,
        failed: 0,
        capped: 0,
        falsifications: 0,
        violations: 0,
        max_chi: MaxChi::default(),
        max_colors_used: None,
        runtime_ms: 0,
    };
    let mut stream = source_graphs(&cfg.source)?;
    let mut chunk = Vec::with_capacity(CHUNK);
    loop {
        chunk.clear();
        for g in stream.by_ref().take(CHUNK) {
            let index = summary.examined;
            let g = g.map_err(|source| CampaignError::Input { index, source })?;
            chunk.push((index, g));
            summary.examined += 1;
        }
        if chunk.is_empty() {
            break;
        }
        for record in eval(&chunk).into_iter().flatten() {
            tally(&mut summary, &record);
            serde_json::to_writer(&mut out, &ReportLine::Graph(&record))?;
            out.write_all(b"\n")?;
        }
    }
    summary.runtime_ms = start.elapsed().as_millis() as u64;
    serde_json::to_writer(&mut out, &ReportLine::Summary(&summary))?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(summary)
}

fn tally(s: &mut Summary, r: &GraphRecord) {
    s.in_class += 1;
    match r.status {
        Status::Pass => s.passed += 1,
        Status::Fail => s.failed += 1,
        Status::Capped => s.capped += 1,
    }
    s.falsifications += r.falsifications.len() as u64;
    s.violations += r.violations.len() as u64;
    if let Some(chi) = r.chi {
        let c = &r.classes;
        let m = &mut s.max_chi;
        for (member, slot) in [
            (c.c1 == Some(true), &mut m.c1),
            (c.c2 == Some(true), &mut m.c2),
            (c.c3 == Some(true), &mut m.c3),
            (c.xv_free == Some(true), &mut m.xv_free),
            (c.triangle_free, &mut m.triangle_free),
            (c.k4_free, &mut m.k4_free),
        ] {
            if member {
                *slot = Some(slot.map_or(chi, |x: usize| x.max(chi)));
            }
        }
    }
    if let Some(used) = r.colors_used {
        s.max_colors_used = Some(s.max_colors_used.map_or(used, |x| x.max(used)));
    }
}
