//! graph6, DOT and JSON encodings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 string. A `>>graph6<<` header and surrounding whitespace
/// are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed_start = text.len() - text.trim_start().len();
    let mut s = text.trim();
    let mut base = trimmed_start;
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base += HEADER.len();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let read = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(parse_err(base + bytes.len(), "truncated length header"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (read(1, 3)?, 4)
    } else {
        (read(2, 6)?, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(parse_err(
            base + pos.min(bytes.len()),
            format!(
                "expected {nbytes} adjacency bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        pos += nbytes - 1;
        let pad = 6 - nbits % 6;
        if (bytes[pos] - 63) & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + pos, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

fn encode_n(n: usize, out: &mut String) {
    let push = |out: &mut String, v: usize, chunks: usize| {
        for c in (0..chunks).rev() {
            out.push(((v >> (6 * c) & 63) as u8 + 63) as char);
        }
    };
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        push(out, n, 3);
    } else {
        out.push_str("~~");
        push(out, n, 6);
    }
}

/// Canonical graph6 encoding (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

/// Graphviz rendering; bipartite graphs get their parts colored. Write-only.
pub fn write_dot(g: &Graph, x_size: Option<usize>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match x_size {
            Some(x) if v < x => out.push_str(&format!("  {v} [label=\"x{v}\", color=blue];\n")),
            Some(x) => out.push_str(&format!("  {v} [label=\"y{}\", color=red];\n", v - x)),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Plain JSON form of a graph. `x_size` marks a bipartite graph whose first
/// `x_size` vertices form the part X.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_size: Option<usize>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            order: g.order(),
            edges: g.edges(),
            x_size: None,
        }
    }

    pub fn from_bipartite(b: &BipartiteGraph) -> Self {
        GraphJson {
            x_size: Some(b.x_size()),
            ..GraphJson::from_graph(&b.to_graph())
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.order, &self.edges)
    }

    pub fn to_bipartite(&self) -> Result<Option<BipartiteGraph>> {
        match self.x_size {
            None => Ok(None),
            Some(x) => Ok(Some(BipartiteGraph::from_graph(&self.to_graph()?, x)?)),
        }
    }
}

/// The part-size sidecar that accompanies a graph6 file for a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSidecar {
    pub x_size: usize,
}
