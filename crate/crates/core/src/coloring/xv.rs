//! Six colors for (X-cycle, V-cycle)-free graphs, by recursion on the
//! trichotomy.

use crate::coloring::exact::exact_chromatic_number_with;
use crate::coloring::parity::parity_lifted;
use crate::coloring::{
    merge_on_clique, per_component, require_xv_free, ColorConfig, Coloring, ColoringError,
};
use crate::decompose::{split_sets, trichotomy, DecomposeError, Trichotomy};
use crate::detectors::{clique_number, find_k_chord_cycle};
use crate::falsification::{CycleDefect, FalsificationReport, LevelScope, TheoremId, Witness};
use crate::graph::Graph;

pub const XV_BOUND: usize = 6;

pub fn color_xv_free(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    if cfg.verify_input {
        require_xv_free(g, cfg.budget)?;
    }
    xv(g, cfg)
}

pub(crate) fn xv(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    per_component(g, XV_BOUND, |h| xv_connected(h, cfg))
}

fn xv_connected(g: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    let all = g.vertices();
    match trichotomy(g) {
        Ok(Trichotomy::CliqueCutset { cutset }) => {
            let (a, b) = split_sets(g, &all, &cutset).map_err(|_| ColoringError::Disconnected)?;
            let (sa, sb) = (g.induced(&a), g.induced(&b));
            let ca = xv(&sa.graph, cfg).map_err(|e| e.lift(&sa, g))?;
            let cb = xv(&sb.graph, cfg).map_err(|e| e.lift(&sb, g))?;
            let mut colors = vec![0; g.n()];
            merge_on_clique(&mut colors, XV_BOUND, (&sa, &ca), (&sb, &cb), cutset.iter());
            Ok(Coloring {
                palette: XV_BOUND,
                colors,
            })
        }
        Ok(Trichotomy::CompleteTripartite { parts }) => {
            let mut colors = vec![0; g.n()];
            for (i, part) in parts.iter().enumerate() {
                for v in part.iter() {
                    colors[v] = i;
                }
            }
            Ok(Coloring {
                palette: XV_BOUND,
                colors,
            })
        }
        Ok(Trichotomy::DiamondFree) => {
            let mut c = parity_lifted(g, 0, |level| three_color_level(level, cfg), 3)?;
            c.palette = XV_BOUND;
            Ok(c)
        }
        Err(DecomposeError::Falsified(r)) => Err(ColoringError::Falsified(r)),
        Err(_) => Err(ColoringError::Disconnected),
    }
}

/// Levels of a diamond-free (X, V)-free graph have no 1-chord cycle and
/// clique number at most 3, hence are 3-colorable. A level that is not is
/// reported as a 1-chord cycle if it has one, otherwise as a level with
/// χ > 3.
fn three_color_level(h: &Graph, cfg: &ColorConfig) -> Result<Coloring, ColoringError> {
    let (chi, c) = exact_chromatic_number_with(h, cfg.exact_cap, cfg.exact_nodes)?;
    if chi <= 3 {
        return Ok(Coloring {
            palette: 3,
            colors: c.colors,
        });
    }
    let report = match find_k_chord_cycle(h, 1, cfg.budget)? {
        Some(cycle) => FalsificationReport::new(
            TheoremId::TwoCycleStep2,
            h,
            Witness::LevelCycle {
                at: LevelScope::whole(h),
                defect: CycleDefect::OneChord,
                cycle,
            },
        ),
        None => FalsificationReport::new(
            TheoremId::OneCycle,
            h,
            Witness::LevelChromatic {
                at: LevelScope::whole(h),
                clique_number: clique_number(h).0,
                chromatic_number: chi,
                bound: 3,
            },
        ),
    };
    Err(ColoringError::Falsified(Box::new(report)))
}
