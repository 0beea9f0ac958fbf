//! graph6 and plain edge-list text formats.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

const BIAS: u8 = 63;
const LONG_MARKER: u8 = 126;
const MAX_LONG_N: usize = 258_047;

fn g6err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Decodes one graph6 line (an optional `>>graph6<<` header and trailing
/// whitespace are accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, body) = match bytes.first() {
        None => return Err(g6err("empty input")),
        Some(&LONG_MARKER) => {
            if bytes.get(1) == Some(&LONG_MARKER) {
                return Err(g6err("graphs above 258047 vertices are not supported"));
            }
            if bytes.len() < 4 {
                return Err(g6err("truncated long-form header"));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(BIAS..=126).contains(&b) {
                    return Err(g6err(format!("malformed header byte {b:#04x}")));
                }
                n = (n << 6) | usize::from(b - BIAS);
            }
            if n < 63 {
                return Err(g6err("long-form header used for fewer than 63 vertices"));
            }
            (n, &bytes[4..])
        }
        Some(&b) if (BIAS..LONG_MARKER).contains(&b) => (usize::from(b - BIAS), &bytes[1..]),
        Some(&b) => return Err(g6err(format!("malformed header byte {b:#04x}"))),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6err(format!(
            "bit stream has {} bytes, {n} vertices need {expected}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(g6err(format!("byte {b:#04x} outside the graph6 alphabet")));
    }

    let mut adj = vec![VertexSet::new(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Encodes `g` as a graph6 line (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_LONG_N, "graph6 cannot encode {n} vertices");
    let mut out = Vec::with_capacity(4 + (n * n / 12) + 1);
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_MARKER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a first line `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let err = |m: String| GraphError::EdgeList(m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| err("missing `n m` header".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| err(format!("bad header `{header}`")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let e = parse_pair(line).ok_or_else(|| err(format!("bad edge line `{line}`")))?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(err(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// True if the text looks like the edge-list format (its first meaningful
/// line is two integers).
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| parse_pair(l).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_from_hand_decoded_bits() {
        // 'D' = 5 vertices; '?' = 000000, '{' = 111100: the last four pair
        // bits are (0,4),(1,4),(2,4),(3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn known_encodings() {
        // K4 has all six bits set: "C~"; the 5-cycle 0-1-2-3-4-0 is "Dhc".
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
    }

    #[test]
    fn long_form_round_trip() {
        let n = 70;
        let edges: Vec<_> = (0..n)
            .map(|i| (i, (i * 7 + 3) % n))
            .filter(|(a, b)| a != b)
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], b'~');
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("not-graph6!").is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{{").is_err());
        assert!(parse_graph6("\u{7f}").is_err());
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 5\n").is_err());
        assert!(looks_like_edge_list("# c\n4 0\n"));
        assert!(!looks_like_edge_list("D?{"));
    }
}
