//! Reading and writing `orbigraph/1` documents, attaching a trace, and DOT
//! export.

use std::fmt::Write;

use orbigraph::dot::to_dot;
use orbigraph::io::{parse_document, write_document, TraceRecord};
use orbigraph::decompose;

const THETA: &str = r#"{"format": "orbigraph/1", "vertices": ["v0", "v1"],
  "edges": [{"id": "e0", "weight": 3, "shape": {"arc": ["v0", "v1"]}},
            {"id": "e1", "weight": 2, "shape": {"arc": ["v0", "v1"]}},
            {"id": "e2", "weight": 2, "shape": {"arc": ["v1", "v0"]}}],
  "witnesses": [{"teardrop": "e0"}]}"#;

pub fn run_example() -> String {
    let mut out = String::new();
    let mut doc = parse_document(THETA).unwrap();
    let canonical = write_document(&doc);
    writeln!(out, "canonical form is {} lines", canonical.lines().count()).unwrap();
    let trace = decompose(&doc.graph, &doc.witnesses).unwrap();
    doc.trace = Some(TraceRecord::from(&trace));
    let with_trace = write_document(&doc);
    writeln!(out, "with trace: {} lines, reparses equal: {}", with_trace.lines().count(), parse_document(&with_trace).unwrap() == doc).unwrap();
    let bad = THETA.replace("\"weight\": 3", "\"weight\": \"3\"");
    writeln!(out, "error: {}", parse_document(&bad).unwrap_err()).unwrap();
    out.push_str(&to_dot(&doc.graph, &doc.witnesses));
    out
}

fn main() {
    print!("{}", run_example());
}
