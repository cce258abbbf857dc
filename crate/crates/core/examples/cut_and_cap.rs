//! Cutting out `X` and capping its boundary spheres.

use std::fmt::Write;

use orbigraph::surgery::apply_cut_and_cap;
use orbigraph::{classify, validate_graph, BadnessWitness, EdgeShape, SingularGraph};

fn describe(g: &SingularGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .map(|(id, e)| match e.shape {
            EdgeShape::Circle => format!("{id}(w{}) circle", e.weight),
            EdgeShape::Arc([a, b]) => format!("{id}(w{}) {a}-{b}", e.weight),
        })
        .collect();
    edges.join(", ")
}

pub fn run_example() -> String {
    let mut out = String::new();
    let mut g = SingularGraph::new();
    let [v0, v1, v2, v3] = [(); 4].map(|_| g.add_vertex());
    g.add_arc(2, v0, v0);
    let e = g.add_arc(3, v0, v1);
    g.add_arc(4, v1, v2);
    g.add_arc(2, v1, v3);
    g.add_arc(2, v2, v3);
    g.add_arc(3, v2, v3);
    writeln!(out, "before: {}", describe(&g)).unwrap();
    let x = classify(&g, &BadnessWitness::teardrop(e)).unwrap();
    writeln!(out, "X:      {}", x.summary()).unwrap();
    let cut = apply_cut_and_cap(&g, &x).unwrap();
    for cap in &cut.caps {
        let germs: Vec<String> = cap.germs.iter().map(|g| g.to_string()).collect();
        writeln!(out, "cap:    {} {} on [{}]", cap.kind, cap.signature, germs.join(" ")).unwrap();
    }
    writeln!(out, "after:  {}", describe(&cut.graph)).unwrap();
    writeln!(out, "valid:  {}", validate_graph(&cut.graph).is_empty()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
