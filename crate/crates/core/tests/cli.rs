use std::path::PathBuf;

use orbigraph::cli::run_command;
use orbigraph::io::parse_document;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("orbigraph").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn classify_teardrop_form2_document() {
    let (code, out, _) = run(&["classify", "--teardrop", "e1", &corpus("teardrop_form2.orb")]);
    assert_eq!(code, 0);
    assert_eq!(out, "TD_Form2  boundary: S2(2,2) ; S2(2,2,3)  underlying: S2xI\n");
}

#[test]
fn classify_football_with_side() {
    let f = corpus("football_arc.orb");
    let (code, out, _) = run(&["classify", "--football", "e1", "e5", "--f-plus-side", "1", &f]);
    assert_eq!(code, 0);
    assert!(out.starts_with("FB_Form1"));
    let (code, _, err) = run(&["classify", "--football", "e1", "e5", &f]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate", &corpus("theta_teardrop.orb")]).0, 0);
    assert_eq!(run(&["validate", &corpus("toroidal_vertex.orb")]).0, 1);
    assert_eq!(run(&["classify", "--teardrop", "e9", &corpus("theta_teardrop.orb")]).0, 2);
    assert_eq!(run(&["validate", &corpus("missing.orb")]).0, 3);
    assert_eq!(run(&["frobnicate"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn decompose_empty_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trace.orb");
    let (code, stdout, _) = run(&["decompose", "--out", out.to_str().unwrap(), &corpus("no_witnesses.orb")]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0 steps\n");
    let doc = parse_document(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc.trace.unwrap().steps.len(), 0);
}

#[test]
fn generate_then_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let gen = dir.path().join("gen.orb");
    let gen = gen.to_str().unwrap();
    assert_eq!(run(&["generate", "--steps", "3", "--rng", "42", "--max-weight", "5", "--out", gen]).0, 0);
    let (code, stdout, _) = run(&["decompose", gen]);
    assert_eq!(code, 0);
    let trace = parse_document(&stdout).unwrap().trace.unwrap();
    assert_eq!(trace.steps.len(), 3);
    let (_, again, _) = run(&["generate", "--steps", "3", "--rng", "42", "--max-weight", "5"]);
    assert_eq!(again, std::fs::read_to_string(gen).unwrap());
}

#[test]
fn generate_from_seed_file() {
    let (code, stdout, _) =
        run(&["generate", "--steps", "2", "--rng", "7", "--seed-file", &corpus("no_witnesses.orb"), "--no-smooth"]);
    assert_eq!(code, 0);
    assert_eq!(parse_document(&stdout).unwrap().witnesses.len(), 2);
}

#[test]
fn cutcap_carries_the_remaining_witnesses() {
    let (code, stdout, _) = run(&["cutcap", &corpus("two_phases.orb")]);
    assert_eq!(code, 0);
    let doc = parse_document(&stdout).unwrap();
    assert_eq!(doc.witnesses.len(), 1);
    assert!(!doc.witnesses[0].is_teardrop());
    assert_eq!(doc.graph.edge_count(), 5);
}

#[test]
fn iso_compares_graphs() {
    let (code, out, _) = run(&["iso", &corpus("theta_teardrop.orb"), &corpus("no_witnesses.orb")]);
    assert_eq!((code, out.as_str()), (0, "isomorphic\n"));
    let (_, out, _) = run(&["iso", &corpus("theta_teardrop.orb"), &corpus("football_loop.orb")]);
    assert_eq!(out, "not isomorphic\n");
}

#[test]
fn export_dot_highlights_witnesses() {
    let (code, out, _) = run(&["export-dot", &corpus("theta_teardrop.orb")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph orbigraph {"));
    assert_eq!(out.matches("color=red").count(), 1);
}
