//! Edge-list, graph6 and action-record formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 1-based
//! vertices and `u < v`. Blank lines and lines starting with `#` are skipped.

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::SymGraph;
use crate::perm::{ImageRecord, Permutation};

/// graph6 output is refused above this many vertices; the upper triangle
/// alone would take hundreds of megabytes.
pub const GRAPH6_MAX_VERTICES: usize = 65_536;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

pub fn write_edge_list(graph: &SymGraph, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count())?;
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", u + 1, v + 1)?;
    }
    out.flush()
}

pub fn read_edge_list(input: impl BufRead) -> Result<SymGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(line_no, format!("expected two integers, found {:?}", text)));
        }
        let a: usize = fields[0]
            .parse()
            .map_err(|_| parse_err(line_no, format!("not an integer: {:?}", fields[0])))?;
        let b: usize = fields[1]
            .parse()
            .map_err(|_| parse_err(line_no, format!("not an integer: {:?}", fields[1])))?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(parse_err(line_no, format!("vertex out of range 1..{n}")));
                }
                if a >= b {
                    return Err(parse_err(line_no, "edge must be written as u v with u < v"));
                }
                edges.push(((a - 1) as u32, (b - 1) as u32));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    let graph = SymGraph::from_edges(n, edges).map_err(|e| parse_err(0, e.to_string()))?;
    if graph.edge_count() != m {
        return Err(parse_err(0, "repeated edge"));
    }
    Ok(graph)
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Standard graph6 encoding, without a trailing newline.
pub fn to_graph6(graph: &SymGraph) -> Result<String, FormatError> {
    let n = graph.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(parse_err(
            0,
            format!("graph6 export is limited to {GRAPH6_MAX_VERTICES} vertices, graph has {n}"),
        ));
    }
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            acc = (acc << 1) | graph.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn from_graph6(text: &str) -> Result<SymGraph, FormatError> {
    let bytes = text.trim_end().as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 data contains a byte outside 63..=126"));
    }
    let take = |from: usize, count: usize| -> Result<usize, FormatError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| parse_err(1, "truncated graph6 size"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, body_start) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, ..] => (take(2, 6)?, 8),
        [126, ..] => (take(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let body = &bytes[body_start..];
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {needed}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n as u32 {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    SymGraph::from_edges(n, edges).map_err(|e| parse_err(1, e.to_string()))
}

/// The action as JSON: `{"vertices": n, "generators": [{degree, images}, ...]}`.
pub fn write_action_record(images: &[Permutation], mut out: impl Write) -> io::Result<()> {
    let record = ActionRecord {
        vertices: images.first().map_or(0, Permutation::degree),
        generators: images.iter().map(ImageRecord::from).collect(),
    };
    serde_json::to_writer(&mut out, &record)?;
    writeln!(out)?;
    out.flush()
}

pub fn read_action_record(input: impl io::Read) -> Result<Vec<Permutation>, FormatError> {
    let record: ActionRecord =
        serde_json::from_reader(input).map_err(|e| parse_err(e.line(), e.to_string()))?;
    record
        .generators
        .iter()
        .map(|g| {
            if g.degree != record.vertices {
                return Err(parse_err(1, "generator degree differs from vertex count"));
            }
            Permutation::try_from(g.clone()).map_err(|e| parse_err(1, e.to_string()))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct ActionRecord {
    vertices: usize,
    generators: Vec<ImageRecord>,
}
