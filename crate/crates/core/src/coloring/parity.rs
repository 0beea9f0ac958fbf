//! Coloring by BFS levels: even levels draw from `[0, p)`, odd levels from
//! `[p, 2p)`. Levels at distance two or more are never adjacent, so proper
//! level colorings combine into a proper coloring.

use crate::coloring::{verify_coloring, write_lifted, Coloring, ColoringError};
use crate::graph::{Graph, GraphError};

/// Public driver: level failures come back wrapped in
/// [`ColoringError::AtLevel`].
pub fn color_by_parity_levels<F>(
    g: &Graph,
    root: usize,
    level_colorer: F,
    per_level_palette: usize,
) -> Result<Coloring, ColoringError>
where
    F: FnMut(&Graph) -> Result<Coloring, ColoringError>,
{
    run(g, root, level_colorer, per_level_palette, false)
}

/// Internal driver: falsification witnesses are rewritten into `g`'s ids
/// with the level appended to their chain.
pub(crate) fn parity_lifted<F>(
    g: &Graph,
    root: usize,
    level_colorer: F,
    p: usize,
) -> Result<Coloring, ColoringError>
where
    F: FnMut(&Graph) -> Result<Coloring, ColoringError>,
{
    run(g, root, level_colorer, p, true)
}

fn run<F>(
    g: &Graph,
    root: usize,
    mut level_colorer: F,
    p: usize,
    lift: bool,
) -> Result<Coloring, ColoringError>
where
    F: FnMut(&Graph) -> Result<Coloring, ColoringError>,
{
    if root >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        }
        .into());
    }
    let decomposition = g.bfs_levels(root)?;
    if !decomposition.unreached.is_empty() {
        return Err(ColoringError::Disconnected);
    }
    let mut colors = vec![0; g.n()];
    for (i, level) in decomposition.levels.iter().enumerate() {
        let sub = g.induced(level);
        let wrap = |e: ColoringError| {
            if lift {
                e.through_level(&sub, g, root, i)
            } else {
                ColoringError::AtLevel {
                    root,
                    level: i,
                    source: Box::new(e),
                }
            }
        };
        let c = level_colorer(&sub.graph).map_err(wrap)?;
        let check = if c.colors.len() != sub.graph.n() {
            Err(ColoringError::Partial {
                expected: sub.graph.n(),
                got: c.colors.len(),
            })
        } else if let Some(&bad) = c.colors.iter().find(|&&x| x >= p) {
            Err(ColoringError::PaletteOverflow {
                color: bad,
                palette: p,
            })
        } else if !verify_coloring(&sub.graph, &c)? {
            Err(ColoringError::Improper)
        } else {
            Ok(())
        };
        check.map_err(|e| ColoringError::AtLevel {
            root,
            level: i,
            source: Box::new(e),
        })?;
        write_lifted(&mut colors, &sub, &c, (i % 2) * p);
    }
    Ok(Coloring {
        palette: 2 * p,
        colors,
    })
}
