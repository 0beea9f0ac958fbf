//! Test-input generators: the Hajós join of two cliques, complete
//! multipartite graphs, named graphs, exhaustive labeled enumeration, seeded
//! Erdős–Rényi streams, and graph6 line streams.

use std::io::BufRead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::io::parse_graph6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("hajos join needs k >= 2, got {0}")]
    HajosTooSmall(usize),
    #[error("complete multipartite graph needs at least one part")]
    NoParts,
    #[error("part {0} has size zero")]
    EmptyPart(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("labeled enumeration is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
}

/// Largest `n` for [`enumerate_labeled`] (2^21 graphs).
pub const MAX_ENUMERATION_N: usize = 7;

/// Hajós join of two copies of `K_k`: cliques `H1 = 0..k-1` and
/// `H2 = k-1..2k-2` (each `K_{k-1}`), apex `x = 2k-2` complete to both,
/// `a = 2k-1` complete to `H1`, `b = 2k` complete to `H2`, and the edge `ab`.
pub fn hajos_join(k: usize) -> Result<Graph, GeneratorError> {
    if k < 2 {
        return Err(GeneratorError::HajosTooSmall(k));
    }
    let h1: Vec<usize> = (0..k - 1).collect();
    let h2: Vec<usize> = (k - 1..2 * k - 2).collect();
    let (x, a, b) = (2 * k - 2, 2 * k - 1, 2 * k);
    let mut edges = Vec::new();
    for side in [&h1, &h2] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                edges.push((u, v));
            }
            edges.push((u, x));
        }
    }
    edges.extend(h1.iter().map(|&u| (u, a)));
    edges.extend(h2.iter().map(|&u| (u, b)));
    edges.push((a, b));
    Ok(Graph::from_edge_list(2 * k + 1, &edges).expect("ids in range"))
}

/// `K_{a_1, .., a_k}` with parts laid out consecutively.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if sizes.is_empty() {
        return Err(GeneratorError::NoParts);
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(GeneratorError::EmptyPart(i));
    }
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v])
        .collect();
    Ok(Graph::from_edge_list(n, &edges).expect("ids in range"))
}

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = if n >= 3 {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    } else {
        Vec::new()
    };
    Graph::from_edge_list(n, &edges).expect("ids in range")
}

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).expect("ids in range")
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("ids in range")
}

/// Outer 5-cycle 0..4, spokes `i -- i+5`, inner pentagram on 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges).expect("ids in range")
}

/// `C<n>`, `K<n>`, `P<n>`, `Petersen`, `Diamond`, `Dragonfly`, `Butterfly`
/// (case-insensitive).
pub fn named_graph(name: &str) -> Result<Graph, GeneratorError> {
    use crate::detectors::PatternName;
    let lower = name.to_ascii_lowercase();
    let unknown = || GeneratorError::UnknownName(name.to_string());
    match lower.as_str() {
        "petersen" => return Ok(petersen()),
        "diamond" => return Ok(PatternName::Diamond.graph()),
        "dragonfly" => return Ok(PatternName::Dragonfly.graph()),
        "butterfly" => return Ok(PatternName::Butterfly.graph()),
        _ => {}
    }
    let (family, size) = lower.split_at(1.min(lower.len()));
    let n: usize = size.parse().map_err(|_| unknown())?;
    match family {
        "c" if n >= 3 => Ok(cycle_graph(n)),
        "k" => Ok(complete_graph(n)),
        "p" => Ok(path_graph(n)),
        _ => Err(unknown()),
    }
}

/// Every labeled graph on `n` vertices, by increasing edge mask (see
/// [`Graph::from_edge_mask`] for the bit layout).
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs, GeneratorError> {
    if n > MAX_ENUMERATION_N {
        return Err(GeneratorError::TooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1u64 << pairs,
    })
}

#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_edge_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// The `index`-th graph of the stream keyed by `seed`: G(n, p) drawn from a
/// ChaCha8 generator seeded with `seed` on stream `index`, so any shard can
/// be replayed on its own.
pub fn random_graph(n: usize, p: f64, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("ids in range")
}

/// `count` reproducible G(n, p) samples.
pub fn random_stream(
    n: usize,
    p: f64,
    count: u64,
    seed: u64,
) -> Result<RandomGraphs, GeneratorError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GeneratorError::BadProbability(p));
    }
    Ok(RandomGraphs {
        n,
        p,
        seed,
        next: 0,
        count,
    })
}

#[derive(Clone, Debug)]
pub struct RandomGraphs {
    n: usize,
    p: f64,
    seed: u64,
    next: u64,
    count: u64,
}

impl Iterator for RandomGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.count {
            return None;
        }
        let g = random_graph(self.n, self.p, self.seed, self.next);
        self.next += 1;
        Some(g)
    }
}

/// Keeps graphs satisfying `predicate`, counting what it drops.
pub fn filter_class<I, P>(stream: I, predicate: P) -> ClassFilter<I, P>
where
    I: Iterator<Item = Graph>,
    P: FnMut(&Graph) -> bool,
{
    ClassFilter {
        inner: stream,
        predicate,
        accepted: 0,
        rejected: 0,
    }
}

pub struct ClassFilter<I, P> {
    inner: I,
    predicate: P,
    accepted: u64,
    rejected: u64,
}

impl<I, P> ClassFilter<I, P> {
    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    pub fn rejected(&self) -> u64 {
        self.rejected
    }
}

impl<I, P> Iterator for ClassFilter<I, P>
where
    I: Iterator<Item = Graph>,
    P: FnMut(&Graph) -> bool,
{
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for g in self.inner.by_ref() {
            if (self.predicate)(&g) {
                self.accepted += 1;
                return Some(g);
            }
            self.rejected += 1;
        }
        None
    }
}

/// Graphs from graph6 lines; blank lines are skipped.
pub fn graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, GraphError>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(&l)),
        Err(e) => Some(Err(GraphError::Graph6(format!("read error: {e}")))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::clique_number;

    #[test]
    fn hajos_small_case_is_c5() {
        let g = hajos_join(2).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert_eq!(hajos_join(1), Err(GeneratorError::HajosTooSmall(1)));
    }

    #[test]
    fn hajos_layout() {
        let k = 4;
        let g = hajos_join(k).unwrap();
        assert_eq!(g.n(), 9);
        let (x, a, b) = (6, 7, 8);
        assert!((0..6).all(|h| g.has_edge(h, x)));
        assert!((0..3).all(|h| g.has_edge(h, a) && !g.has_edge(h, b)));
        assert!((3..6).all(|h| g.has_edge(h, b) && !g.has_edge(h, a)));
        assert!(g.has_edge(a, b) && !g.has_edge(a, x));
        assert_eq!(clique_number(&g).0, 4);
    }

    #[test]
    fn multipartite_examples() {
        let d = complete_multipartite(&[1, 1, 2]).unwrap();
        assert_eq!((d.n(), d.edge_count()), (4, 5));
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 12);
        assert_eq!(
            complete_multipartite(&[1, 1, 1, 1]).unwrap(),
            complete_graph(4)
        );
        assert_eq!(
            complete_multipartite(&[2, 0]),
            Err(GeneratorError::EmptyPart(1))
        );
        assert_eq!(complete_multipartite(&[]), Err(GeneratorError::NoParts));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("Dragonfly").unwrap().edge_count(), 9);
        assert_eq!(named_graph("butterfly").unwrap().edge_count(), 7);
        assert_eq!(named_graph("C5").unwrap(), cycle_graph(5));
        assert_eq!(named_graph("P3").unwrap().edge_count(), 2);
        let p = named_graph("Petersen").unwrap();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(named_graph("Q7").is_err());
        assert!(named_graph("C2").is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled(0).unwrap().count(), 1);
        assert!(enumerate_labeled(8).is_err());
        let all: std::collections::HashSet<_> = enumerate_labeled(4).unwrap().collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn random_stream_contract() {
        let empty: Vec<_> = random_stream(10, 0.0, 3, 11).unwrap().collect();
        assert_eq!(empty.len(), 3);
        assert!(empty.iter().all(|g| g.edge_count() == 0));
        let full: Vec<_> = random_stream(5, 1.0, 1, 11).unwrap().collect();
        assert_eq!(full[0], complete_graph(5));
        let a: Vec<_> = random_stream(9, 0.4, 20, 5).unwrap().collect();
        let b: Vec<_> = random_stream(9, 0.4, 20, 5).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a[13], random_graph(9, 0.4, 5, 13));
        assert!(random_stream(5, 1.5, 1, 0).is_err());
    }

    #[test]
    fn filter_counts_rejections() {
        let mut f = filter_class(enumerate_labeled(3).unwrap(), |g| g.edge_count() == 3);
        assert_eq!(f.by_ref().count(), 1);
        assert_eq!((f.accepted(), f.rejected()), (1, 7));
    }

    #[test]
    fn graph6_stream() {
        let text = "D?{\n\n@\n";
        let gs: Vec<_> = graph6_lines(text.as_bytes())
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(gs.len(), 2);
    }
}
