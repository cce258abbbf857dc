//! Graphviz export. Output only; there is no DOT reader.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::graph::{EdgeShape, SingularGraph};
use crate::ids::EdgeId;
use crate::witness::BadnessWitness;

/// Vertices become points, arcs are labelled `e3 (w=2)`, and each circle is
/// drawn as a loop through an anonymous node. Witness edges are bold red.
pub fn to_dot(g: &SingularGraph, witnesses: &[BadnessWitness]) -> String {
    let marked: BTreeSet<EdgeId> = witnesses.iter().flat_map(|w| w.edges()).collect();
    let mut out = String::from("graph orbigraph {\n  node [shape=point];\n");
    for v in g.vertices() {
        writeln!(out, "  \"{v}\" [xlabel=\"{v}\"];").unwrap();
    }
    for (id, e) in g.edges() {
        let style = if marked.contains(&id) { ", color=red, penwidth=2" } else { "" };
        let label = format!("label=\"{id} (w={})\"{style}", e.weight);
        match e.shape {
            EdgeShape::Arc([a, b]) => writeln!(out, "  \"{a}\" -- \"{b}\" [{label}];").unwrap(),
            EdgeShape::Circle => {
                writeln!(out, "  \"{id}_c\" [shape=point, style=invis];").unwrap();
                writeln!(out, "  \"{id}_c\" -- \"{id}_c\" [{label}];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
