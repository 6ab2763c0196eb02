//! DIMACS `.col` reading and writing.
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>        (1-based)
//! ```

use std::fmt::Write as _;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn parse_count(tok: Option<&str>, what: &str, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("malformed header: missing {what}")))?;
    if tok.starts_with('-') {
        return Err(Error::parse(line, format!("negative {what} {tok:?}")));
    }
    tok.parse()
        .map_err(|_| Error::parse(line, format!("malformed header: bad {what} {tok:?}")))
}

fn parse_index(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, "malformed edge line"))?;
    if tok.starts_with('-') {
        return Err(Error::parse(
            line,
            format!("edge index out of range: {tok}"),
        ));
    }
    let i: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("malformed edge index {tok:?}")))?;
    if i == 0 || i > n {
        return Err(Error::parse(
            line,
            format!("edge index out of range: {i} not in 1..={n}"),
        ));
    }
    Ok(i - 1)
}

/// Parses a graph file: JSON (`{"n": .., "edges": [..]}`) when the first
/// non-blank character is `{`, DIMACS otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(text)?)
    } else {
        parse_dimacs(text)
    }
}

/// Parses DIMACS `.col` text. Duplicate edges and both orientations of the
/// same pair collapse; the declared edge count is not enforced.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_ascii_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            line,
                            format!("malformed header: expected `p edge`, found {other:?}"),
                        ))
                    }
                }
                let n = parse_count(toks.next(), "vertex count", line)?;
                parse_count(toks.next(), "edge count", line)?;
                if toks.next().is_some() {
                    return Err(Error::parse(line, "malformed header: trailing tokens"));
                }
                if n > MAX_VERTICES {
                    return Err(Error::parse(
                        line,
                        format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}"),
                    ));
                }
                graph = Some(Graph::empty(n)?);
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(line, "edge line before `p edge` header"))?;
                let n = g.n();
                let u = parse_index(toks.next(), n, line)?;
                let v = parse_index(toks.next(), n, line)?;
                if toks.next().is_some() {
                    return Err(Error::parse(line, "malformed edge line: trailing tokens"));
                }
                if u == v {
                    return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
                }
                g.insert_edge(u, v);
            }
            Some(other) => {
                return Err(Error::parse(line, format!("unknown line type {other:?}")));
            }
        }
    }
    graph.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing `p edge` header"))
}

/// Serializes to DIMACS with edges sorted by `(min, max)`.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
