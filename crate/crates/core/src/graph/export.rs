use std::fmt::Write as _;

use serde::Serialize;

use super::Graph;

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    label: &'a str,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: Vec<JsonVertex<'a>>,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// `{"vertices": [{"id", "label"}], "edges": [[i, j]]}` with `i <= j`, sorted.
    pub fn to_json(&self) -> String {
        let doc = JsonGraph {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| JsonVertex { id, label: &v.label })
                .collect(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (id, v) in self.vertices.iter().enumerate() {
            let label = v.label.replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(out, "  v{id} [label=\"{label}\"];").unwrap();
        }
        for (i, j) in self.edges() {
            writeln!(out, "  v{i} -- v{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
