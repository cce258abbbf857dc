//! Running a witness list, teardrops first, and reading the summand ledger.

use std::fmt::Write;

use orbigraph::{decompose, BadnessWitness, DecomposeError, SingularGraph};

pub fn run_example() -> String {
    let mut out = String::new();
    let mut g = SingularGraph::new();
    let a = g.add_vertex();
    let b = g.add_vertex();
    let e = g.add_arc(3, a, b);
    g.add_arc(2, a, b);
    g.add_arc(2, a, b);
    let heavy = g.add_circle(5);
    let t = g.add_circle(7);
    let light = g.add_circle(2);
    let witnesses = [BadnessWitness::teardrop(e), BadnessWitness::teardrop(t), BadnessWitness::football(heavy, light, None)];
    let trace = decompose(&g, &witnesses).unwrap();
    for s in &trace.steps {
        writeln!(out, "step {}: {:<18} {}  ({} graph components, {} left)", s.index, s.witness.to_string(), s.x.summary(), s.graph_components, s.remaining).unwrap();
    }
    writeln!(out, "n = {}, m = {}, final edges = {}", trace.n, trace.m, trace.final_graph.edge_count()).unwrap();

    let out_of_order = [witnesses[2], witnesses[0]];
    let err: DecomposeError = decompose(&g, &out_of_order).unwrap_err();
    writeln!(out, "football first: {err}").unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
