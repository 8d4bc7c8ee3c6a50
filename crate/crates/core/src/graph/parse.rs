use std::collections::HashMap;

use super::{Graph, Label, Vertex};
use crate::error::{Error, Result};

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// vertex names, a single name declares an isolated vertex, `#` starts a
/// comment line. Vertex ids and labels follow first appearance.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph> {
    parse_edge_list_named(text).map(|(g, _)| g)
}

/// Like [`parse_edge_list`], also returning the vertex names indexed by id.
pub fn parse_edge_list_named(text: &[u8]) -> Result<(Graph, Vec<String>)> {
    let text =
        std::str::from_utf8(text).map_err(|e| Error::Parse { line: 0, message: format!("input is not UTF-8: {e}") })?;
    let mut g = Graph::new();
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut intern = |g: &mut Graph, name: &str| -> Vertex {
        if let Some(&v) = ids.get(name) {
            return v;
        }
        let v = names.len();
        g.add_vertex(v, v as Label).expect("fresh vertex");
        ids.insert(name.to_owned(), v);
        names.push(name.to_owned());
        v
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse { line: line_no, message };
        match fields.as_slice() {
            [name] => {
                intern(&mut g, name);
            }
            [a, b] => {
                if a == b {
                    return Err(err(format!("self-loop on {a}")));
                }
                let u = intern(&mut g, a);
                let v = intern(&mut g, b);
                if g.has_edge(u, v) {
                    return Err(err(format!("duplicate edge {a} {b}")));
                }
                g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("expected one or two names, found {}", fields.len()))),
        }
    }
    Ok((g, names))
}

/// Renders a graph in edge-list form, naming vertices by id. Isolated
/// vertices get their own line.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(&format!("{v}\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
