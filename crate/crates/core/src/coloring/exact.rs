//! DSATUR branch and bound. A maximum clique is precolored `0..ω` and
//! gives the lower bound; a greedy DSATUR pass gives the first upper bound.
//! Ties go to higher saturation, then higher degree, then smaller id.

use crate::bitset::VertexSet;
use crate::coloring::{Coloring, ColoringError, MAX_EXACT_PALETTE};
use crate::detectors::{clique_number, SearchError};
use crate::graph::Graph;

pub const DEFAULT_EXACT_CAP: usize = 64;
pub const DEFAULT_EXACT_NODES: u64 = 500_000_000;

const UNSET: usize = usize::MAX;

/// `(χ(g), an optimal coloring)` with the default cap and node limit.
pub fn exact_chromatic_number(g: &Graph) -> Result<(usize, Coloring), ColoringError> {
    exact_chromatic_number_with(g, DEFAULT_EXACT_CAP, DEFAULT_EXACT_NODES)
}

pub fn exact_chromatic_number_with(
    g: &Graph,
    cap: usize,
    nodes: u64,
) -> Result<(usize, Coloring), ColoringError> {
    let cap = cap.min(MAX_EXACT_PALETTE);
    if g.n() > cap {
        return Err(ColoringError::TooLarge { n: g.n(), cap });
    }
    let mut colors = vec![0; g.n()];
    let mut chi = 0;
    let mut budget = nodes;
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let (k, local) = solve_connected(&sub.graph, &mut budget, nodes)?;
        chi = chi.max(k);
        for (i, c) in local.into_iter().enumerate() {
            colors[sub.lift(i)] = c;
        }
    }
    Ok((
        chi,
        Coloring {
            palette: chi,
            colors,
        },
    ))
}

/// χ of `G[within]`.
pub(crate) fn chromatic_number_within(
    g: &Graph,
    within: &VertexSet,
) -> Result<usize, ColoringError> {
    let sub = g.induced(within);
    exact_chromatic_number(&sub.graph).map(|(k, _)| k)
}

fn solve_connected(
    g: &Graph,
    budget: &mut u64,
    limit: u64,
) -> Result<(usize, Vec<usize>), ColoringError> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let (omega, clique) = clique_number(g);
    let mut colors = vec![UNSET; n];
    for (c, v) in clique.iter().enumerate() {
        colors[v] = c;
    }
    let mut s = Search {
        g,
        colors,
        best: Vec::new(),
        best_k: n + 1,
        lower: omega,
        budget,
        limit,
    };
    let greedy = s.greedy();
    s.best_k = greedy.iter().max().map_or(0, |&c| c + 1);
    s.best = greedy;
    if s.best_k > s.lower {
        s.branch(clique.len(), omega)?;
    }
    Ok((s.best_k, s.best))
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
    budget: &'a mut u64,
    limit: u64,
}

impl Search<'_> {
    fn mask(&self, v: usize) -> u128 {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&w| self.colors[w] != UNSET)
            .fold(0u128, |m, w| m | 1u128 << self.colors[w])
    }

    fn pick(&self) -> Option<(usize, u128)> {
        let mut best: Option<(usize, u128, u32, usize)> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != UNSET {
                continue;
            }
            let m = self.mask(v);
            let sat = m.count_ones();
            let deg = self.g.degree(v);
            let better = match best {
                None => true,
                Some((_, _, bs, bd)) => (sat, deg) > (bs, bd),
            };
            if better {
                best = Some((v, m, sat, deg));
            }
        }
        best.map(|(v, m, _, _)| (v, m))
    }

    fn greedy(&mut self) -> Vec<usize> {
        let saved = self.colors.clone();
        while let Some((v, m)) = self.pick() {
            self.colors[v] = (!m).trailing_zeros() as usize;
        }
        std::mem::replace(&mut self.colors, saved)
    }

    fn branch(&mut self, colored: usize, used: usize) -> Result<(), ColoringError> {
        let Some((v, m)) = self.pick() else {
            self.best_k = used;
            self.best = self.colors.clone();
            return Ok(());
        };
        debug_assert!(colored < self.g.n());
        let top = (used + 1).min(self.best_k - 1);
        for c in 0..top {
            if m >> c & 1 == 1 {
                continue;
            }
            if *self.budget == 0 {
                return Err(SearchError::NodeLimit { limit: self.limit }.into());
            }
            *self.budget -= 1;
            self.colors[v] = c;
            self.branch(colored + 1, used.max(c + 1))?;
            self.colors[v] = UNSET;
            if self.best_k <= self.lower || self.best_k <= used.max(c + 1) {
                break;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::generators::{complete_multipartite, enumerate_labeled, hajos_join, named_graph};

    fn chi(g: &Graph) -> usize {
        let (k, c) = exact_chromatic_number(g).unwrap();
        assert!(verify_coloring(g, &c).unwrap());
        assert_eq!(c.colors_used(), k);
        k
    }

    #[test]
    fn examples() {
        assert_eq!(chi(&named_graph("C5").unwrap()), 3);
        assert_eq!(chi(&named_graph("C6").unwrap()), 2);
        for n in 1..9 {
            assert_eq!(chi(&named_graph(&format!("K{n}")).unwrap()), n);
        }
        assert_eq!(chi(&named_graph("Petersen").unwrap()), 3);
        assert_eq!(chi(&complete_multipartite(&[3, 3]).unwrap()), 2);
        assert_eq!(chi(&complete_multipartite(&[1, 2, 3, 1]).unwrap()), 4);
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&Graph::empty(4)), 1);
        assert_eq!(chi(&hajos_join(4).unwrap()), 5);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(70);
        assert!(matches!(
            exact_chromatic_number(&g),
            Err(ColoringError::TooLarge { n: 70, cap: 64 })
        ));
        assert_eq!(exact_chromatic_number_with(&g, 100, 1000).unwrap().0, 1);
    }

    #[test]
    fn node_limit_is_reported() {
        let g = hajos_join(6).unwrap();
        let r = exact_chromatic_number_with(&g, 64, 0);
        assert!(matches!(
            r,
            Err(ColoringError::Search(SearchError::NodeLimit { limit: 0 }))
        ));
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (0..=n)
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total).any(|mut code| {
                    let mut c = vec![0; n];
                    for x in c.iter_mut() {
                        *x = (code % k as u64) as usize;
                        code /= k as u64;
                    }
                    g.edges().all(|(u, v)| c[u] != c[v])
                })
            })
            .unwrap()
    }

    #[test]
    fn agrees_with_brute_force_on_five_vertices() {
        for g in enumerate_labeled(5).unwrap() {
            assert_eq!(chi(&g), brute_chi(&g), "{g:?}");
        }
    }
}
