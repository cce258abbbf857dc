//! Small valid graphs up to isomorphism, and the isomorphism test itself.

use std::collections::BTreeMap;
use std::fmt::Write;

use orbigraph::oracle::{enumerate_small_graphs, graphs_isomorphic, EnumerationBounds};
use orbigraph::{EdgeId, VertexId};

pub fn run_example() -> String {
    let mut out = String::new();
    let bounds = EnumerationBounds { max_weight: 4, max_vertices: 4, max_edges: 6 };
    let graphs = enumerate_small_graphs(bounds);
    let mut by_vertices: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &graphs {
        *by_vertices.entry(g.vertex_count()).or_default() += 1;
    }
    writeln!(out, "{} graphs with weights <= 4, at most 4 vertices and 6 edges", graphs.len()).unwrap();
    for (v, n) in by_vertices {
        writeln!(out, "  {v} vertices: {n}").unwrap();
    }
    let g = graphs.iter().find(|g| g.vertex_count() == 4).unwrap();
    let vmap = g.vertices().map(|v| (v, VertexId(10 - v.0))).collect();
    let emap = g.edge_ids().map(|e| (e, EdgeId(20 + e.0))).collect();
    let h = g.relabel(&vmap, &emap);
    writeln!(out, "relabelled copy isomorphic: {}", graphs_isomorphic(g, &h)).unwrap();
    let others = graphs.iter().filter(|o| graphs_isomorphic(o, &h)).count();
    writeln!(out, "enumerated graphs isomorphic to it: {others}").unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
