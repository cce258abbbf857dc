//! Building a bad orbifold from a good seed with a seeded generator, then
//! taking it apart again.

use std::fmt::Write;

use orbigraph::oracle::{random_bad_orbifold, GenerateOptions};
use orbigraph::{decompose, SingularGraph};

pub fn run_example() -> String {
    let mut out = String::new();
    let mut seed = SingularGraph::new();
    seed.add_circle(2);
    let options = GenerateOptions { max_weight: 5, allow_smooth: true };
    let (g, witnesses) = random_bad_orbifold(&seed, 4, 2024, options).unwrap();
    writeln!(out, "{} vertices, {} edges", g.vertex_count(), g.edge_count()).unwrap();
    let list: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
    writeln!(out, "witnesses: {}", list.join(", ")).unwrap();
    let trace = decompose(&g, &witnesses).unwrap();
    for entry in &trace.ledger {
        let b: Vec<String> = entry.boundaries.iter().map(|s| s.to_string()).collect();
        writeln!(out, "  {:<10} {:<13} {}", entry.form.to_string(), entry.underlying.to_string(), b.join(" ; ")).unwrap();
    }
    writeln!(out, "left with {} vertices, {} edges", trace.final_graph.vertex_count(), trace.final_graph.edge_count()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
