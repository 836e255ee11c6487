//! Adjacency, DOT and graph6 renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{HbgError, Result};
use crate::graph::{build_graph, HbGraph};
use crate::spec::ChordIndexSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Adjacency,
    Dot,
    Graph6,
}

impl FromStr for ExportFormat {
    type Err = HbgError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "adj" => Ok(ExportFormat::Adjacency),
            "dot" => Ok(ExportFormat::Dot),
            "graph6" | "g6" => Ok(ExportFormat::Graph6),
            other => Err(HbgError::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn export_graph(spec: &ChordIndexSpec, format: ExportFormat) -> Result<Vec<u8>> {
    Ok(render(&build_graph(spec)?, format).into_bytes())
}

pub fn render(g: &HbGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Adjacency => to_adjacency(g),
        ExportFormat::Dot => to_dot(g),
        ExportFormat::Graph6 => to_graph6(g),
    }
}

/// One line per vertex: `label: n1 n2 n3`.
pub fn to_adjacency(g: &HbGraph) -> String {
    let mut s = String::new();
    for x in 1..=g.order() {
        let [a, b, c] = g.neighbors(x);
        let _ = writeln!(s, "{x}: {a} {b} {c}");
    }
    s
}

pub fn to_dot(g: &HbGraph) -> String {
    let mut s = String::from("graph hbg {\n");
    for (a, b) in g.edges() {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}

/// Header-less graph6, vertex `i` is label `i + 1`. Ends with a newline.
pub fn to_graph6(g: &HbGraph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = encode_size(n);
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.is_adjacent(i + 1, j + 1));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                v |= 1 << (5 - k);
            }
        }
        out.push(v + 63);
    }
    out.push(b'\n');
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn encode_size(n: usize) -> Vec<u8> {
    let six = |shift: u32| ((n >> shift) & 63) as u8 + 63;
    if n < 63 {
        vec![n as u8 + 63]
    } else if n < 258_048 {
        vec![126, six(12), six(6), six(0)]
    } else {
        vec![126, 126, six(30), six(24), six(18), six(12), six(6), six(0)]
    }
}

fn g6_err(reason: impl Into<String>) -> HbgError {
    HbgError::ParseError {
        line: 1,
        reason: reason.into(),
    }
}

/// Decodes a graph6 string into its edge list (0-based, `i < j`).
pub fn parse_graph6(s: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
    let bytes = s.as_bytes();
    if bytes.iter().any(|&c| !(63..=126).contains(&c)) || bytes.is_empty() {
        return Err(g6_err("not a graph6 string"));
    }
    let field = |from: usize, len: usize| -> Result<usize> {
        let part = bytes.get(from..from + len).ok_or_else(|| g6_err("truncated size"))?;
        Ok(part.iter().fold(0, |acc, &c| (acc << 6) | (c - 63) as usize))
    };
    let (n, start) = match (bytes[0], bytes.get(1)) {
        (126, Some(126)) => (field(2, 6)?, 8),
        (126, _) => (field(1, 3)?, 4),
        (c, _) => ((c - 63) as usize, 1),
    };
    let body = &bytes[start..];
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != need {
        return Err(g6_err(format!("expected {need} data bytes, got {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

/// Parses `label: n1 n2 n3` lines back into a graph on the Hamiltonian
/// cycle `1, 2, .., n`.
pub fn parse_adjacency(text: &str) -> Result<HbGraph> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let err = |reason: String| HbgError::ParseError { line: i + 1, reason };
        if line.trim().is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| err("missing `:`".into()))?;
        let label: usize = head.trim().parse().map_err(|_| err(format!("bad label `{head}`")))?;
        let nbrs = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad neighbour `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if label != rows.len() + 1 {
            return Err(err(format!("expected label {}, got {label}", rows.len() + 1)));
        }
        rows.push((label, nbrs));
    }
    let n = rows.len();
    let edges = rows
        .iter()
        .flat_map(|(x, ns)| ns.iter().map(move |&y| (x - 1, y.wrapping_sub(1))));
    from_edges(n, edges)
}

/// Graph from 0-based edges, each given in one or both directions, that
/// contain the cycle `0, 1, .., n-1`.
pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<HbGraph> {
    let mut chords = vec![0usize; n];
    for (a, b) in edges {
        if a >= n || b >= n {
            return Err(HbgError::MalformedGraph(format!("edge {a}-{b} outside 0..{n}")));
        }
        if (a + 1) % n == b || (b + 1) % n == a {
            continue;
        }
        for (x, y) in [(a, b), (b, a)] {
            if chords[x] != 0 && chords[x] != y + 1 {
                return Err(HbgError::MalformedGraph(format!("label {} has two chords", x + 1)));
            }
            chords[x] = y + 1;
        }
    }
    HbGraph::from_chords(&chords)
}

pub fn from_graph6(s: &str) -> Result<HbGraph> {
    let (n, edges) = parse_graph6(s)?;
    from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(order: usize, chords: &[usize]) -> HbGraph {
        build_graph(&ChordIndexSpec::new(order, chords.len(), chords.to_vec())).unwrap()
    }

    #[test]
    fn adjacency_first_line() {
        let text = to_adjacency(&graph(14, &[5]));
        assert_eq!(text.lines().next(), Some("1: 2 6 14"));
        assert_eq!(text.lines().count(), 14);
    }

    #[test]
    fn graph6_matches_networkx() {
        // networkx.to_graph6_bytes(..., header=False)
        assert_eq!(to_graph6(&graph(14, &[5])), "MhEGHC@AI?_PC@_G_\n");
        assert_eq!(to_graph6(&graph(12, &[5])), "KhEGHD@AG_oP\n");
        assert_eq!(
            to_graph6(&graph(30, &[7, 9, 17])),
            "]hCGKC@?G?c@?@?__?G?@C?C?_G??G?CC??@A??G?_?_?C@O??@???___??G?O?@??C?E???_G\n"
        );
    }

    #[test]
    fn graph6_size_prefix() {
        assert_eq!(to_graph6(&graph(14, &[5])).as_bytes()[0], b'M');
        let big = to_graph6(&graph(64, &[5]));
        assert_eq!(&big.as_bytes()[..4], &[126, 63, 64, 63]);
        assert_eq!(encode_size(258_048).len(), 8);
    }

    #[test]
    fn round_trips() {
        for (order, chords) in [(14, vec![5]), (64, vec![5]), (30, vec![7, 9, 17]), (24, vec![5, 9])] {
            let g = graph(order, &chords);
            assert_eq!(parse_adjacency(&to_adjacency(&g)).unwrap(), g);
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn dot_edges_once() {
        let dot = to_dot(&graph(14, &[5]));
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 21);
        assert!(dot.contains("  1 -- 6;"));
        assert!(!dot.contains("6 -- 1;"));
    }

    #[test]
    fn formats() {
        assert!(matches!("svg".parse::<ExportFormat>(), Err(HbgError::UnsupportedFormat(_))));
        assert!(matches!(
            export_graph(&ChordIndexSpec::new(20, 3, vec![3, 5, 7]), ExportFormat::Dot),
            Err(HbgError::InvalidSpec(_))
        ));
    }

    #[test]
    fn bad_inputs() {
        assert!(parse_adjacency("1: 2 3\n3: 1 2\n").is_err());
        assert!(parse_graph6("M?").is_err());
    }
}
