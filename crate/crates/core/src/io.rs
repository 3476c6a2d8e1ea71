//! Plain-text graph and partition files.
//!
//! Graph file: the first content line holds the order `n`; every further
//! content line is an edge `u v`. Partition file: every content line is one
//! block of whitespace-separated vertex ids. Blank lines and lines starting
//! with `#` are ignored in both.

use std::fmt::Write as _;

use crate::error::{Error, PartitionError, Result};
use crate::graph::Graph;
use crate::vertex_partition::VertexPartition;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex id, found `{token}`"),
    })
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("expected the vertex count, found `{header}`"),
    })?;
    let mut edges = Vec::new();
    for (line, content) in lines {
        let ids = content
            .split_whitespace()
            .map(|t| parse_id(t, line))
            .collect::<Result<Vec<_>>>()?;
        let [u, v] = ids[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected `u v`, found {} fields", ids.len()),
            });
        };
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop on vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

/// Canonical form: order on the first line, then sorted `u v` with `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_partition(text: &str, g: &Graph) -> Result<VertexPartition> {
    let n = g.order();
    let mut blocks = Vec::new();
    for (line, content) in content_lines(text) {
        let block = content
            .split_whitespace()
            .map(|t| parse_id(t, line))
            .collect::<Result<Vec<_>>>()?;
        if let Some(&v) = block.iter().find(|&&v| v >= n) {
            return Err(PartitionError::OutOfRange { vertex: v, n }.into());
        }
        blocks.push(block);
    }
    Ok(VertexPartition::new(n, blocks)?)
}

pub fn write_partition(p: &VertexPartition) -> String {
    let mut out = String::new();
    for block in p.blocks() {
        let line: Vec<String> = block.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
