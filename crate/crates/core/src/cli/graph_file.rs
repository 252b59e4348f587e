//! Line-based graph files.
//!
//! ```text
//! # comment
//! vertex <id> <weight> [arrows=<n>]
//! edge <id> <id>
//! ```
//!
//! Blank lines and `#` comments are ignored. Edges may appear before or
//! after the vertices they mention; validation happens once the whole file is
//! read.

use crate::decorated::DecoratedGraph;
use crate::graph::{PlumbingGraph, VertexId};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<DecoratedGraph, ParseError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "vertex" => {
                if !(3..=4).contains(&fields.len()) {
                    return Err(err(line, "expected `vertex <id> <weight> [arrows=<n>]`"));
                }
                let id: u32 = fields[1].parse().map_err(|_| err(line, format!("bad vertex id {:?}", fields[1])))?;
                let weight: i64 = fields[2].parse().map_err(|_| err(line, format!("bad weight {:?}", fields[2])))?;
                let arrows = match fields.get(3) {
                    None => 0,
                    Some(f) => f
                        .strip_prefix("arrows=")
                        .and_then(|n| n.parse::<usize>().ok())
                        .ok_or_else(|| err(line, format!("expected arrows=<n>, found {f:?}")))?,
                };
                vertices.push((line, id, weight, arrows));
            }
            "edge" => {
                if fields.len() != 3 {
                    return Err(err(line, "expected `edge <id> <id>`"));
                }
                let parse = |s: &str| s.parse::<u32>().map_err(|_| err(line, format!("bad vertex id {s:?}")));
                edges.push((line, parse(fields[1])?, parse(fields[2])?));
            }
            other => return Err(err(line, format!("unknown directive {other:?}"))),
        }
    }

    let mut g = PlumbingGraph::new();
    for &(line, id, weight, _) in &vertices {
        g.add_vertex(VertexId(id), weight).map_err(|e| err(line, e.to_string()))?;
    }
    for &(line, u, v) in &edges {
        g.add_edge(VertexId(u), VertexId(v)).map_err(|e| err(line, e.to_string()))?;
    }
    let mut dg = DecoratedGraph::new(g);
    for &(line, id, _, arrows) in &vertices {
        dg.add_arrows(VertexId(id), arrows).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(dg)
}

pub fn render_graph(g: &PlumbingGraph) -> String {
    render_decorated(&DecoratedGraph::new(g.clone()))
}

pub fn render_decorated(dg: &DecoratedGraph) -> String {
    let mut s = String::new();
    for (v, w) in dg.graph().weighted_vertices() {
        match dg.arrows_at(v) {
            0 => writeln!(s, "vertex {v} {w}"),
            n => writeln!(s, "vertex {v} {w} arrows={n}"),
        }
        .unwrap();
    }
    for (u, v) in dg.graph().edges() {
        writeln!(s, "edge {u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_with_arrow() {
        let dg = parse_graph("vertex 1 -1 arrows=1").unwrap();
        assert_eq!(dg.graph().len(), 1);
        assert_eq!(dg.arrows_at(VertexId(1)), 1);
    }

    #[test]
    fn resolution_of_x6_y9() {
        let text = "# x^6 + y^9\nvertex 1 -2\nvertex 2 -1 arrows=3\nvertex 3 -3\nedge 1 2\nedge 2 3\n";
        let dg = parse_graph(text).unwrap();
        assert!(dg.graph().is_isomorphic(&PlumbingGraph::chain(&[-2, -1, -3])));
        assert_eq!(dg.total_arrows(), 3);
        assert_eq!(render_decorated(&dg), text.trim_start_matches("# x^6 + y^9\n"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_graph("edge 1 2").unwrap_err().line, 1);
        let e = parse_graph("vertex 1 -2\nvertex 1 -3").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_graph("vertex 1 -2\nvertex 2 -2\nvertex 3 -2\nedge 1 2\nedge 2 3\nedge 3 1").unwrap_err();
        assert_eq!(e.line, 6);
        assert!(e.message.contains("cycle"));
        assert_eq!(parse_graph("\n\nvertex x 1").unwrap_err().line, 3);
        assert_eq!(parse_graph("vertex 1 -1 arrow=2").unwrap_err().line, 1);
        assert_eq!(parse_graph("node 1").unwrap_err().line, 1);
    }
}
