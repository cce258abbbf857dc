//! Cone signatures of 2-orbifolds, their classes and Euler characteristics,
//! and the vertex inequality.

use std::fmt::Write;

use orbigraph::signature::{orbifold_euler_characteristic, vertex_triple_is_admissible};
use orbigraph::{ConeSignature, Weight};

pub fn run_example() -> String {
    let mut out = String::new();
    let samples: [&[u32]; 9] = [&[], &[5], &[2, 2], &[2, 3], &[2, 2, 7], &[2, 3, 5], &[2, 3, 6], &[2, 3, 7], &[2, 2, 2, 2]];
    for s in samples {
        let sig = ConeSignature::new(s.iter().copied()).unwrap();
        let chi = orbifold_euler_characteristic(&sig);
        writeln!(out, "{:<14}{:<20}chi = {chi}", sig.to_string(), format!("{:?}", sig.classify())).unwrap();
    }
    let w = |x| Weight::new(x).unwrap();
    for t in [[2, 3, 5], [2, 3, 6], [3, 3, 3], [2, 2, 9]] {
        let ok = vertex_triple_is_admissible(w(t[0]), w(t[1]), w(t[2]));
        writeln!(out, "vertex {t:?}: {}", if ok { "admissible" } else { "not admissible" }).unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
