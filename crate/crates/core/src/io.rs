//! Plain edge-list and graph6 readers and writers.
//!
//! Edge-list format (0-indexed):
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines)
//! ```

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

/// Largest vertex count in short-form graph6.
pub const GRAPH6_MAX_N: usize = 62;

/// Graph read from an edge list, plus the normalized `(min, max)` pairs that
/// appeared more than once and were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub graph: Graph,
    pub duplicate_edges: Vec<(usize, usize)>,
}

impl EdgeListDocument {
    pub fn has_duplicates(&self) -> bool {
        !self.duplicate_edges.is_empty()
    }
}

fn edge_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| edge_err(line_no, format!("expected two integers for {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| edge_err(line_no, format!("invalid integer {tok:?} in {what}")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(edge_err(line_no, format!("trailing fields after {what}")));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Duplicate edges are collapsed and reported.
pub fn parse_edge_list(input: &[u8]) -> Result<EdgeListDocument, ParseError> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let line = input[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        edge_err(line, "input is not valid UTF-8")
    })?;

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| edge_err(1, "missing header \"n m\""))?;
    let (n, m) = parse_pair(header_line, header, "header")?;
    let mut graph = Graph::empty(n).map_err(|e| edge_err(header_line, e.to_string()))?;

    let mut duplicate_edges = Vec::new();
    let mut last_line = header_line;
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| edge_err(last_line + 1, format!("expected {m} edges, input ended early")))?;
        last_line = line_no;
        let (u, v) = parse_pair(line_no, line, "edge")?;
        match graph.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => duplicate_edges.push((u.min(v), u.max(v))),
            Err(GraphError::VertexOutOfRange { vertex, n }) => {
                return Err(edge_err(
                    line_no,
                    format!("index out of range: vertex {vertex} with n = {n}"),
                ))
            }
            Err(GraphError::SelfLoop(v)) => return Err(edge_err(line_no, format!("self-loop at vertex {v}"))),
            Err(e) => return Err(edge_err(line_no, e.to_string())),
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(edge_err(line_no, format!("more than the declared {m} edges")));
    }
    Ok(EdgeListDocument { graph, duplicate_edges })
}

/// Canonical edge-list text: header, then edges sorted lexicographically.
pub fn write_edge_list(graph: &Graph) -> String {
    let edges = graph.edges();
    let mut out = String::with_capacity(8 + edges.len() * 6);
    let _ = writeln!(out, "{} {}", graph.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn graph6_payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one short-form graph6 record. A trailing newline and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(record: &[u8]) -> Result<Graph, ParseError> {
    let mut bytes = record;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    let (&size_byte, payload) = bytes
        .split_first()
        .ok_or_else(|| ParseError::Graph6("empty record".into()))?;
    if size_byte == 126 {
        return Err(ParseError::Graph6TooLarge(63));
    }
    if !(63..126).contains(&size_byte) {
        return Err(ParseError::Graph6(format!("invalid size byte {size_byte}")));
    }
    let n = (size_byte - 63) as usize;
    let expected = graph6_payload_len(n);
    if payload.len() != expected {
        return Err(ParseError::Graph6(format!(
            "n = {n} needs {expected} payload bytes, found {}",
            payload.len()
        )));
    }
    if let Some(&bad) = payload.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(ParseError::Graph6(format!("byte {bad} outside 63..=126")));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    for pad in k..expected * 6 {
        let byte = payload[pad / 6] - 63;
        if byte >> (5 - pad % 6) & 1 == 1 {
            return Err(ParseError::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_adjacency(adj).map_err(|e| ParseError::Graph6(e.to_string()))
}

/// Short-form graph6 record, without a trailing newline.
pub fn write_graph6(graph: &Graph) -> Result<Vec<u8>, ParseError> {
    let n = graph.n();
    if n > GRAPH6_MAX_N {
        return Err(ParseError::Graph6TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + graph6_payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(out)
}
