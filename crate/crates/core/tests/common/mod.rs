//! Shared helpers for the integration tests.

#![allow(dead_code)]

use chordcycle::Graph;

/// Brute-force chord counting. Every cyclic sequence of distinct vertices
/// of `K_n` is listed once, as a mask of its cycle edges and a mask of all
/// pairs inside its vertex set; a graph contains the cycle when it has all
/// the cycle edges, and the chords are the remaining pairs present.
pub struct CycleOracle {
    n: usize,
    cycles: Vec<(u64, u64, u32)>,
}

fn pair_bit(n: usize, u: usize, v: usize) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    // row-major upper triangle
    let index = a * n - a * (a + 1) / 2 + (b - a - 1);
    1 << index
}

impl CycleOracle {
    pub fn new(n: usize) -> Self {
        assert!(n * (n.saturating_sub(1)) / 2 <= 64);
        let mut cycles = Vec::new();
        let mut path = Vec::new();
        for start in 0..n {
            path.push(start);
            extend(n, &mut path, &mut cycles);
            path.pop();
        }
        CycleOracle { n, cycles }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn mask(&self, g: &Graph) -> u64 {
        assert_eq!(g.n(), self.n);
        let mut m = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if g.has_edge(u, v) {
                    m |= pair_bit(self.n, u, v);
                }
            }
        }
        m
    }

    /// Bit `k` set iff `g` has a cycle with exactly `k` chords.
    pub fn chord_counts(&self, g: &Graph) -> u64 {
        let m = self.mask(g);
        let mut out = 0u64;
        for &(edges, span, len) in &self.cycles {
            if m & edges == edges {
                let chords = (m & span).count_ones() - len;
                out |= 1 << chords;
            }
        }
        out
    }
}

fn extend(n: usize, path: &mut Vec<usize>, out: &mut Vec<(u64, u64, u32)>) {
    let len = path.len();
    if len >= 3 && path[1] < path[len - 1] {
        let mut edges = pair_bit(n, path[0], path[len - 1]);
        for w in path.windows(2) {
            edges |= pair_bit(n, w[0], w[1]);
        }
        let mut span = 0;
        for (i, &a) in path.iter().enumerate() {
            for &b in &path[i + 1..] {
                span |= pair_bit(n, a, b);
            }
        }
        out.push((edges, span, len as u32));
    }
    for v in path[0] + 1..n {
        if !path.contains(&v) {
            path.push(v);
            extend(n, path, out);
            path.pop();
        }
    }
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut it = bits.iter();
    for u in 0..n {
        for v in u + 1..n {
            if *it.next().unwrap_or(&false) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// `g` with vertex `v` renamed `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(g.n(), &edges).unwrap()
}
