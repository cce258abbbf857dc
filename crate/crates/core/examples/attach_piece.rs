//! Gluing a bad piece into a good graph, then cutting it back out, for each
//! form's curated instance.

use std::fmt::Write;

use orbigraph::oracle::{curated_round_trips, run_round_trip};

pub fn run_example() -> String {
    let mut out = String::new();
    for case in curated_round_trips() {
        let r = run_round_trip(&case).unwrap();
        let sites: Vec<String> = case.sites.iter().map(|s| s.to_string()).collect();
        writeln!(
            out,
            "{:<10} {:<28} at {:<28} {:<24} restored isomorphic: {}",
            case.form.to_string(),
            format!("{:?}", case.params),
            sites.join(", "),
            r.witness.to_string(),
            r.isomorphic
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
