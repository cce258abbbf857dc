//! The three football forms. The two-sided form needs the side datum, which
//! the graph alone does not determine.

use std::fmt::Write;

use orbigraph::{classify, BadnessWitness, End, SingularGraph};

pub fn run_example() -> String {
    let mut out = String::new();

    let mut g = SingularGraph::new();
    let e = g.add_circle(5);
    let a = g.add_vertex();
    let b = g.add_vertex();
    let f = g.add_arc(2, a, b);
    g.add_arc(2, a, b);
    g.add_arc(3, a, b);
    let x = classify(&g, &BadnessWitness::football(e, f, None)).unwrap();
    writeln!(out, "e circle       {}", x.summary()).unwrap();

    let mut g = SingularGraph::new();
    let [v0, v1, v2, v3] = [(); 4].map(|_| g.add_vertex());
    g.add_arc(2, v0, v0);
    let e = g.add_arc(4, v0, v1);
    g.add_arc(2, v1, v2);
    g.add_arc(3, v1, v2);
    g.add_arc(2, v2, v3);
    let f = g.add_arc(2, v3, v3);
    for side in [End::Zero, End::One] {
        let x = classify(&g, &BadnessWitness::football(e, f, Some(side))).unwrap();
        writeln!(out, "e arc, side {side}  {}", x.summary()).unwrap();
    }
    let err = classify(&g, &BadnessWitness::football(e, f, None)).unwrap_err();
    writeln!(out, "e arc, no side  {err}").unwrap();

    let mut g = SingularGraph::new();
    let v = g.add_vertex();
    let w = g.add_vertex();
    let e = g.add_arc(3, v, v);
    g.add_arc(2, v, w);
    let f = g.add_arc(2, w, w);
    let x = classify(&g, &BadnessWitness::football(e, f, None)).unwrap();
    writeln!(out, "e loop         {}", x.summary()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
