//! Every example runs and prints what it claims.


#[allow(dead_code)]
#[path = "../examples/classify_signatures.rs"]
mod classify_signatures;
#[allow(dead_code)]
#[path = "../examples/teardrop_local_picture.rs"]
mod teardrop_local_picture;
#[allow(dead_code)]
#[path = "../examples/football_forms.rs"]
mod football_forms;
#[allow(dead_code)]
#[path = "../examples/cut_and_cap.rs"]
mod cut_and_cap;
#[allow(dead_code)]
#[path = "../examples/attach_piece.rs"]
mod attach_piece;
#[allow(dead_code)]
#[path = "../examples/decompose_trace.rs"]
mod decompose_trace;
#[allow(dead_code)]
#[path = "../examples/generate_bad_orbifold.rs"]
mod generate_bad_orbifold;
#[allow(dead_code)]
#[path = "../examples/enumerate_and_iso.rs"]
mod enumerate_and_iso;
#[allow(dead_code)]
#[path = "../examples/documents_and_dot.rs"]
mod documents_and_dot;

#[test]
fn signatures() {
    let out = classify_signatures::run_example();
    assert!(out.contains("S2(2,3,5)     SphericalTriangle"));
    assert!(out.contains("vertex [3, 3, 3]: not admissible"));
}

#[test]
fn teardrops() {
    let out = teardrop_local_picture::run_example();
    for form in ["TD_Smooth", "TD_Form5a", "TD_Form2", "TD_Form4a"] {
        assert!(out.contains(form), "{form}\n{out}");
    }
}

#[test]
fn footballs() {
    let out = football_forms::run_example();
    for form in ["FB_Smooth", "FB_Form1", "FB_Form2"] {
        assert!(out.contains(form), "{form}\n{out}");
    }
}

#[test]
fn cutting() {
    let out = cut_and_cap::run_example();
    assert!(out.contains("cap:    cone S2(2,2,3)"));
    assert!(out.contains("valid:  true"));
}

#[test]
fn attaching() {
    let out = attach_piece::run_example();
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().all(|l| l.ends_with("restored isomorphic: true")));
}

#[test]
fn decomposing() {
    let out = decompose_trace::run_example();
    assert!(out.contains("n = 2, m = 1"));
    assert!(out.contains("football first:"));
}

#[test]
fn generating() {
    let out = generate_bad_orbifold::run_example();
    assert!(out.lines().nth(1).unwrap().starts_with("witnesses: "));
    assert_eq!(out, generate_bad_orbifold::run_example());
}

#[test]
fn enumerating() {
    let out = enumerate_and_iso::run_example();
    assert!(out.contains("relabelled copy isomorphic: true"));
    assert!(out.contains("enumerated graphs isomorphic to it: 1"));
}

#[test]
fn documents() {
    let out = documents_and_dot::run_example();
    assert!(out.contains("reparses equal: true"));
    assert!(out.contains("edges[0].weight"));
    assert!(out.contains("graph orbigraph {"));
}
