//! Plain-text graph files.
//!
//! ```text
//! # optional comments
//! 4
//! 1 2
//! 2 4
//! ```
//!
//! The first data line is the vertex count `n` (vertices `1..=n`), each
//! further line an edge `u v` with `1 <= u < v <= n`.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{OrderedGraph, VertexId};
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<OrderedGraph> {
    let mut n: Option<u32> = None;
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            if fields.len() != 1 {
                return Err(Error::parse(lineno, "expected the vertex count"));
            }
            let count = fields[0]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad vertex count {:?}", fields[0])))?;
            n = Some(count);
            continue;
        };
        let [u, v] = fields[..] else {
            return Err(Error::parse(lineno, "expected an edge \"u v\""));
        };
        let parse_id = |s: &str| -> Result<VertexId> {
            let id: VertexId = s
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad vertex id {s:?}")))?;
            if id == 0 || id > count {
                return Err(Error::parse(lineno, format!("vertex {id} out of range 1..={count}")));
            }
            Ok(id)
        };
        let (u, v) = (parse_id(u)?, parse_id(v)?);
        if u == v {
            return Err(Error::parse(lineno, format!("loop at vertex {u}")));
        }
        if !edges.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(lineno, format!("duplicate edge {u} {v}")));
        }
    }

    let n = n.ok_or_else(|| Error::parse(last_line.max(1), "missing vertex count"))?;
    OrderedGraph::from_edges(n, edges)
}

/// Writes the graph with its vertices relabeled `1..=n` by order, edges
/// sorted lexicographically.
pub fn write_graph(g: &OrderedGraph) -> String {
    let mut out = format!("{}\n", g.len());
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .map(|e| (g.index_of(e.s()).unwrap() + 1, g.index_of(e.t()).unwrap() + 1))
        .collect();
    pairs.sort();
    for (u, v) in pairs {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
