//! Graph file formats.
//!
//! Edge list: the first non-comment line holds the vertex count `N`, each
//! following line holds `i j w` (0-based indices, decimal weight). Lines whose
//! first non-blank character is `#` are comments; blank lines are ignored.
//!
//! JSON: `{"num_vertices": N, "edges": [[i, j, w], ...]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "txt" => Ok(Self::EdgeList),
            "json" => Ok(Self::Json),
            other => Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("unknown graph format `{other}`"),
            }),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    num_vertices: usize,
    edges: Vec<(usize, usize, f64)>,
}

/// Parses a graph in the given format and validates it.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<WeightedGraph> {
    let (n, edges) = match format {
        GraphFormat::EdgeList => decode_edge_list(text)?,
        GraphFormat::Json => decode_json(text)?,
    };
    WeightedGraph::new(n, &edges)
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into tokens tagged with their 1-based starting column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(pos),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..pos]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn decode_edge_list(text: &str) -> Result<(usize, Vec<Edge>)> {
    let mut num_vertices = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        if num_vertices.is_none() {
            let [(col, tok)] = toks[..] else {
                return Err(parse_error(
                    line_no,
                    toks[0].0,
                    "expected a single vertex count",
                ));
            };
            let n = tok
                .parse::<usize>()
                .map_err(|e| parse_error(line_no, col, format!("bad vertex count `{tok}`: {e}")))?;
            num_vertices = Some(n);
            continue;
        }
        if toks.len() != 3 {
            let col = toks.get(3).map_or(raw.len() + 1, |t| t.0);
            return Err(parse_error(
                line_no,
                col,
                format!("expected `i j w`, found {} fields", toks.len()),
            ));
        }
        let index = |(col, tok): (usize, &str)| {
            tok.parse::<usize>()
                .map_err(|e| parse_error(line_no, col, format!("bad vertex index `{tok}`: {e}")))
        };
        let i = index(toks[0])?;
        let j = index(toks[1])?;
        let (col, tok) = toks[2];
        let w = tok
            .parse::<f64>()
            .map_err(|e| parse_error(line_no, col, format!("bad weight `{tok}`: {e}")))?;
        edges.push((i, j, w));
    }
    let n = num_vertices.ok_or_else(|| parse_error(1, 1, "missing vertex count"))?;
    Ok((n, edges))
}

fn decode_json(text: &str) -> Result<(usize, Vec<Edge>)> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    Ok((doc.num_vertices, doc.edges))
}

/// Formats a float with 17 significant digits, enough to round-trip exactly.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serialises to the edge-list format, edges ascending with `i < j`.
pub fn to_edge_list(g: &WeightedGraph) -> String {
    let mut out = format!("{}\n", g.num_vertices());
    for (i, j, w) in g.edges() {
        let _ = writeln!(out, "{i} {j} {}", format_f64(w));
    }
    out
}

pub fn to_json(g: &WeightedGraph) -> String {
    let doc = GraphDocument {
        num_vertices: g.num_vertices(),
        edges: g.edges().collect(),
    };
    serde_json::to_string(&doc).expect("graph document serialises")
}
