use std::fmt::Write;

use super::CccGraph;

/// Graphviz rendering with one `subgraph cluster_k` per component.
///
/// Vertices keep their canonical class order inside each cluster, and
/// clusters follow the order of their smallest vertex.
pub fn to_dot(g: &CccGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", escape(&g.group_label));
    let _ = writeln!(out, "  node [shape=ellipse];");
    for (k, comp) in g.graph.components().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{k} {{");
        for &v in comp {
            let _ = writeln!(
                out,
                "    v{v} [label=\"{} ({})\"];",
                escape(&g.labels[v]),
                g.vertices[v].size()
            );
        }
        for (i, &u) in comp.iter().enumerate() {
            for &v in &comp[i + 1..] {
                if g.graph.has_edge(u, v) {
                    let _ = writeln!(out, "    v{u} -- v{v};");
                }
            }
        }
        let _ = writeln!(out, "  }}");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
