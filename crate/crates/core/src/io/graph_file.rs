//! Plain-text graph files.
//!
//! ```text
//! c comment
//! p graph <vertices> <edges> <edge|vertex|none>
//! w <v> <weight>          one per vertex, vertex mode only
//! e <u> <v> [<weight>]    weight required in edge mode, forbidden in none
//! ```
//!
//! Indices are 1-based; weights are integers, `p/q` or decimals.  In vertex
//! mode an edge may carry a weight, which defaults to 1.

use std::fmt::{self, Write};

use num::One;

use super::parse_error;
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::rational::{self, Rational};

/// Weight mode declared in the header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Edge,
    Vertex,
    None,
}

impl WeightMode {
    /// The mode [`write_graph`] uses for `g`.
    pub fn of(g: &WeightedGraph) -> Self {
        if g.vertex_weights().is_some() {
            WeightMode::Vertex
        } else if g.has_unit_edge_weights() {
            WeightMode::None
        } else {
            WeightMode::Edge
        }
    }
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightMode::Edge => "edge",
            WeightMode::Vertex => "vertex",
            WeightMode::None => "none",
        })
    }
}

/// Parses a graph file; every malformed line is an error with its number.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut header: Option<(usize, usize, WeightMode)> = None;
    let mut edges: Vec<(usize, usize, Rational)> = Vec::new();
    let mut vertex_weights: Vec<Option<Rational>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts[0] == "p" {
            if header.is_some() {
                return parse_error(line_no, "second problem line");
            }
            let mode = match parts.get(4).copied() {
                Some("edge") => Some(WeightMode::Edge),
                Some("vertex") => Some(WeightMode::Vertex),
                Some("none") => Some(WeightMode::None),
                _ => None,
            };
            let parsed = match (parts.len(), parts.get(1)) {
                (5, Some(&"graph")) => parts[2]
                    .parse::<usize>()
                    .ok()
                    .zip(parts[3].parse::<usize>().ok())
                    .zip(mode),
                _ => None,
            };
            let Some(((n, m), mode)) = parsed else {
                return parse_error(line_no, format!("malformed problem line {line:?}"));
            };
            vertex_weights = vec![None; n];
            edges.reserve(m.min(1 << 24));
            header = Some((n, m, mode));
            continue;
        }
        let Some((n, _, mode)) = header else {
            return parse_error(line_no, "record before the problem line");
        };
        let index = |token: &str| -> Result<usize> {
            match token.parse::<usize>() {
                Ok(v) if v >= 1 && v <= n => Ok(v - 1),
                _ => parse_error(line_no, format!("vertex index {token:?} is not in 1..={n}")),
            }
        };
        let weight = |token: &str| -> Result<Rational> {
            rational::parse(token)
                .or_else(|_| parse_error(line_no, format!("malformed weight {token:?}")))
        };
        match (parts[0], parts.len(), mode) {
            ("e", 3, WeightMode::None | WeightMode::Vertex) => {
                edges.push((index(parts[1])?, index(parts[2])?, Rational::one()));
            }
            ("e", 4, WeightMode::Edge | WeightMode::Vertex) => {
                edges.push((index(parts[1])?, index(parts[2])?, weight(parts[3])?));
            }
            ("e", 3, WeightMode::Edge) => {
                return parse_error(line_no, "edge mode needs a weight on every edge")
            }
            ("e", 4, WeightMode::None) => return parse_error(line_no, "weight given in mode none"),
            ("w", 3, WeightMode::Vertex) => {
                let v = index(parts[1])?;
                if vertex_weights[v].is_some() {
                    return parse_error(line_no, format!("second weight for vertex {}", v + 1));
                }
                vertex_weights[v] = Some(weight(parts[2])?);
            }
            ("w", 3, _) => return parse_error(line_no, format!("vertex weight in mode {mode}")),
            _ => return parse_error(line_no, format!("malformed record {line:?}")),
        }
        if let Some(&(u, v, _)) = edges.last().filter(|_| parts[0] == "e") {
            if u == v {
                return parse_error(line_no, "self-loops are not allowed");
            }
        }
    }
    let Some((n, m, mode)) = header else {
        return parse_error(last_line.max(1), "missing problem line");
    };
    if edges.len() != m {
        return parse_error(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    let mut g = match mode {
        WeightMode::Vertex => {
            let mut ws = Vec::with_capacity(n);
            for (v, w) in vertex_weights.into_iter().enumerate() {
                match w {
                    Some(w) => ws.push(w),
                    None => {
                        return parse_error(
                            last_line.max(1),
                            format!("vertex {} has no weight", v + 1),
                        )
                    }
                }
            }
            WeightedGraph::with_vertex_weights(ws)
        }
        _ => WeightedGraph::new(n),
    };
    for (u, v, w) in edges {
        g.add_edge(u, v, w).expect("endpoints were checked");
    }
    Ok(g)
}

/// Canonical text for `g`: header, vertex weights in vertex order, then
/// edges in edge order.  Mode is vertex when `g` has vertex weights, edge
/// when some edge weight differs from 1, none otherwise.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mode = WeightMode::of(g);
    let mut out = String::with_capacity(16 * g.num_edges() + 32);
    writeln!(out, "p graph {} {} {mode}", g.num_vertices(), g.num_edges()).unwrap();
    if let Some(ws) = g.vertex_weights() {
        for (v, w) in ws.iter().enumerate() {
            writeln!(out, "w {} {}", v + 1, rational::format(w)).unwrap();
        }
    }
    for (_, u, v, w) in g.edges() {
        match mode {
            WeightMode::Edge => writeln!(out, "e {} {} {}", u + 1, v + 1, rational::format(w)),
            _ if !w.is_one() => writeln!(out, "e {} {} {}", u + 1, v + 1, rational::format(w)),
            _ => writeln!(out, "e {} {}", u + 1, v + 1),
        }
        .unwrap();
    }
    out
}
