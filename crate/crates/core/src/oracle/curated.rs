//! One hand-picked attach-then-cut instance per form.
//!
//! Each seed is chosen so that the attached witness classifies as the form
//! that was attached (for instance, the first teardrop form goes on two
//! separate circles, because attaching both sides to one circle creates a
//! theta graph where the parallel-arc rule fires first; the third form uses
//! two thetas for the same reason).

use crate::classify::{classify, ClassifyError, Form, XDescription};
use crate::graph::SingularGraph;
use crate::ids::{EdgeId, VertexId};
use crate::surgery::{apply_cut_and_cap, attach_piece, AttachmentSite, PieceSpec, SurgeryError};
use crate::witness::BadnessWitness;

use super::iso::graphs_isomorphic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripCase {
    pub form: Form,
    pub params: Vec<u32>,
    pub seed: SingularGraph,
    pub sites: Vec<AttachmentSite>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripReport {
    pub attached: SingularGraph,
    pub witness: BadnessWitness,
    pub x: XDescription,
    pub restored: SingularGraph,
    pub isomorphic: bool,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RoundTripError {
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

fn theta(g: &mut SingularGraph, weights: [u32; 3]) -> VertexId {
    let a = g.add_vertex();
    let b = g.add_vertex();
    for w in weights {
        g.add_arc(w, a, b);
    }
    a
}

fn circle(weight: u32) -> (SingularGraph, EdgeId) {
    let mut g = SingularGraph::new();
    let c = g.add_circle(weight);
    (g, c)
}

fn case(form: Form, params: &[u32], seed: SingularGraph, sites: Vec<AttachmentSite>) -> RoundTripCase {
    RoundTripCase { form, params: params.to_vec(), seed, sites }
}

/// The curated suite, in form order.
pub fn curated_round_trips() -> Vec<RoundTripCase> {
    use AttachmentSite::{EdgePoint, Smooth, Vertex};
    let mut out = Vec::new();

    out.push(case(Form::TdSmooth, &[4], SingularGraph::new(), vec![Smooth]));

    let mut g = SingularGraph::new();
    let c0 = g.add_circle(2);
    let c1 = g.add_circle(2);
    out.push(case(Form::TdForm1, &[3, 2, 2], g, vec![EdgePoint(c0), EdgePoint(c1)]));

    let mut g = SingularGraph::new();
    let c = g.add_circle(2);
    let v = theta(&mut g, [2, 2, 3]);
    out.push(case(Form::TdForm2, &[3, 2, 4, 2, 2, 3], g, vec![EdgePoint(c), Vertex(v)]));

    let mut g = SingularGraph::new();
    let v = theta(&mut g, [2, 2, 2]);
    let w = theta(&mut g, [2, 2, 2]);
    out.push(case(Form::TdForm3, &[2, 3, 2, 2, 2, 3, 2, 2, 2], g, vec![Vertex(v), Vertex(w)]));

    let (g, c) = circle(3);
    out.push(case(Form::TdForm4a, &[3, 2, 3], g, vec![EdgePoint(c)]));

    let mut g = SingularGraph::new();
    let v = theta(&mut g, [2, 2, 2]);
    out.push(case(Form::TdForm4b, &[3, 2, 3, 2, 2, 2], g, vec![Vertex(v)]));

    let (g, c) = circle(2);
    out.push(case(Form::TdForm5a, &[3, 2, 2], g, vec![EdgePoint(c)]));

    let mut g = SingularGraph::new();
    let v = theta(&mut g, [2, 2, 2]);
    out.push(case(Form::TdForm5b, &[2, 2, 2, 3, 2, 2], g, vec![Vertex(v)]));

    let mut g = SingularGraph::new();
    let v = theta(&mut g, [2, 2, 3]);
    out.push(case(Form::TdForm6, &[2, 4, 3, 3, 2, 2], g, vec![Vertex(v)]));

    let (g, c) = circle(2);
    out.push(case(Form::FbSmooth, &[2, 3], g, vec![EdgePoint(c)]));

    let mut g = SingularGraph::new();
    let v = theta(&mut g, [2, 2, 2]);
    let w = theta(&mut g, [2, 2, 2]);
    out.push(case(Form::FbForm1, &[2, 3, 2, 2, 2, 2], g, vec![Vertex(v), Vertex(w)]));

    let mut g = SingularGraph::new();
    let v = theta(&mut g, [2, 2, 2]);
    out.push(case(Form::FbForm2, &[2, 3, 2], g, vec![Vertex(v)]));

    out
}

/// Attaches the piece, classifies its witness, cuts and caps, and compares
/// the result with the seed.
pub fn run_round_trip(case: &RoundTripCase) -> Result<RoundTripReport, RoundTripError> {
    let piece = PieceSpec::new(case.form, &case.params).map_err(SurgeryError::from)?;
    let attached = attach_piece(&case.seed, &piece, &case.sites)?;
    let x = classify(&attached.graph, &attached.witness)?;
    let restored = apply_cut_and_cap(&attached.graph, &x)?.graph;
    let isomorphic = graphs_isomorphic(&restored, &case.seed);
    Ok(RoundTripReport { attached: attached.graph, witness: attached.witness, x, restored, isomorphic })
}
