//! JSON and DOT formats for digraph positions.
//!
//! ```json
//! {"name": "half",
//!  "vertices": [{"id": "a", "color": "blue"}, {"id": "b", "color": "red"}],
//!  "arcs": [["a", "b"]],
//!  "edges": []}
//! ```
//!
//! An edge `[u, v]` stands for the two arcs `u -> v` and `v -> u`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Color, DigraphError, DigraphGame};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: String,
    color: Color,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: Vec<VertexDoc>,
    #[serde(default)]
    arcs: Vec<[String; 2]>,
    #[serde(default)]
    edges: Vec<[String; 2]>,
}

fn from_doc(doc: GraphDoc) -> Result<DigraphGame, DigraphError> {
    let mut g = DigraphGame::new();
    g.set_name(doc.name);
    for v in doc.vertices {
        g.add_vertex(v.id, v.color)?;
    }
    for [a, b] in &doc.arcs {
        g.add_arc_by_label(a, b)?;
    }
    for [a, b] in &doc.edges {
        g.add_edge_by_label(a, b)?;
    }
    Ok(g)
}

fn to_doc(g: &DigraphGame) -> GraphDoc {
    let mut arcs = Vec::new();
    let mut edges = Vec::new();
    for (u, v) in g.arcs() {
        let pair = [g.label(u).to_string(), g.label(v).to_string()];
        if g.has_arc(v, u) {
            if u < v {
                edges.push(pair);
            }
        } else {
            arcs.push(pair);
        }
    }
    GraphDoc {
        name: g.name().map(str::to_string),
        vertices: (0..g.order())
            .map(|v| VertexDoc { id: g.label(v).to_string(), color: g.color(v) })
            .collect(),
        arcs,
        edges,
    }
}

pub fn parse_json(text: &str) -> Result<DigraphGame, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))?;
    Ok(from_doc(doc)?)
}

pub fn from_json_value(value: &serde_json::Value) -> Result<DigraphGame, FormatError> {
    let doc = GraphDoc::deserialize(value).map_err(|e| FormatError::Parse(e.to_string()))?;
    Ok(from_doc(doc)?)
}

pub fn to_json_value(g: &DigraphGame) -> serde_json::Value {
    serde_json::to_value(to_doc(g)).expect("digraph document serializes")
}

/// Pretty JSON; opposing arc pairs are written as edges.
pub fn to_json(g: &DigraphGame) -> String {
    serde_json::to_string_pretty(&to_doc(g)).expect("digraph document serializes")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source: blue vertices are circles, red ones boxes, and opposing
/// arc pairs become a single undirected line.
pub fn to_dot(g: &DigraphGame) -> String {
    let mut out = String::new();
    let name = g.name().unwrap_or("G");
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in 0..g.order() {
        let (shape, color) = match g.color(v) {
            Color::Blue => ("circle", "blue"),
            Color::Red => ("box", "red"),
        };
        writeln!(out, "  {} [shape={shape}, color={color}];", quote(g.label(v))).unwrap();
    }
    for (u, v) in g.arcs() {
        let (a, b) = (quote(g.label(u)), quote(g.label(v)));
        if g.has_arc(v, u) {
            if u < v {
                writeln!(out, "  {a} -> {b} [dir=none];").unwrap();
            }
        } else {
            writeln!(out, "  {a} -> {b};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
