//! Edge-list text format and DOT export.
//!
//! Edge-list files are UTF-8 text: `u v` declares an edge, a single token
//! declares an isolated vertex, `#` starts a comment line.

use std::fmt::Write as _;

use super::{Graph, GraphError};
use crate::recognize::Orientation;

impl Graph {
    /// Parses the edge-list format. Vertices appear in first-mention order.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [v] => {
                    g.ensure_vertex(v);
                }
                [u, v] => {
                    if u == v {
                        return Err(GraphError::MalformedEdgeList {
                            line: i + 1,
                            reason: format!("loop edge at `{u}`"),
                        });
                    }
                    g.ensure_vertex(u);
                    g.ensure_vertex(v);
                    g.add_edge(u, v)?;
                }
                _ => {
                    return Err(GraphError::MalformedEdgeList {
                        line: i + 1,
                        reason: format!("expected 1 or 2 tokens, found {}", tokens.len()),
                    })
                }
            }
        }
        Ok(g)
    }

    /// Serializes back to the edge-list format (edges first-vertex-major,
    /// then any isolated vertices).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        for id in 0..self.vertex_count() {
            if self.degree(id) == 0 {
                let _ = writeln!(out, "{}", self.label(id));
            }
        }
        out
    }

    /// Undirected DOT output; node lines carry optional extra attributes
    /// supplied per label.
    pub fn to_dot(&self, name: &str, mut node_attr: impl FnMut(&str) -> Option<String>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in self.labels() {
            match node_attr(v) {
                Some(attr) => {
                    let _ = writeln!(out, "  \"{v}\" [{attr}];");
                }
                None => {
                    let _ = writeln!(out, "  \"{v}\";");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
        }
        out.push_str("}\n");
        out
    }

    /// DOT digraph of this graph under the given orientation.
    pub fn to_dot_oriented(
        &self,
        name: &str,
        orientation: &Orientation,
        mut node_attr: impl FnMut(&str) -> Option<String>,
    ) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        for v in self.labels() {
            match node_attr(v) {
                Some(attr) => {
                    let _ = writeln!(out, "  \"{v}\" [{attr}];");
                }
                None => {
                    let _ = writeln!(out, "  \"{v}\";");
                }
            }
        }
        for (u, v) in orientation.directed_edges() {
            let _ = writeln!(out, "  \"{u}\" -> \"{v}\";");
        }
        out.push_str("}\n");
        out
    }
}
