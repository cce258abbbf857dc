//! The local picture around a teardrop: which form the flowchart picks, the
//! boundary spheres of `X` and its underlying space.

use std::fmt::Write;

use orbigraph::{classify, BadnessWitness, SingularGraph};

fn theta() -> (SingularGraph, orbigraph::EdgeId) {
    let mut g = SingularGraph::new();
    let a = g.add_vertex();
    let b = g.add_vertex();
    let e = g.add_arc(3, a, b);
    g.add_arc(2, a, b);
    g.add_arc(2, a, b);
    (g, e)
}

/// The weight-3 edge joins a vertex with a weight-2 loop to one with
/// branches of weight 4 and 2.
fn unequal_ends() -> (SingularGraph, orbigraph::EdgeId) {
    let mut g = SingularGraph::new();
    let [v0, v1, v2, v3] = [(); 4].map(|_| g.add_vertex());
    g.add_arc(2, v0, v0);
    let e = g.add_arc(3, v0, v1);
    g.add_arc(4, v1, v2);
    g.add_arc(2, v1, v3);
    g.add_arc(2, v2, v3);
    g.add_arc(3, v2, v3);
    (g, e)
}

fn loop_teardrop() -> (SingularGraph, orbigraph::EdgeId) {
    let mut g = SingularGraph::new();
    let v = g.add_vertex();
    let w = g.add_vertex();
    let e = g.add_arc(3, v, v);
    g.add_arc(2, v, w);
    g.add_arc(3, w, w);
    (g, e)
}

pub fn run_example() -> String {
    let mut out = String::new();
    let mut circle = SingularGraph::new();
    let c = circle.add_circle(5);
    let cases = [("circle", (circle, c)), ("theta", theta()), ("unequal ends", unequal_ends()), ("loop", loop_teardrop())];
    for (name, (g, e)) in cases {
        let x = classify(&g, &BadnessWitness::teardrop(e)).unwrap();
        writeln!(out, "{name:<13} {}", x.summary()).unwrap();
        let germs: Vec<String> = x.boundary.iter().map(|b| {
            b.germs.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
        }).collect();
        writeln!(out, "{:<13} germs: [{}]", "", germs.join("] [")).unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
