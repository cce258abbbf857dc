//! Cut-and-cap: delete the interior of `X`, sever the surviving edges at its
//! boundary germs and cap each boundary sphere.

use std::collections::BTreeMap;
use std::fmt;

use crate::classify::{CutGerm, GermSite, XDescription};
use crate::graph::{validate_graph, SingularGraph};
use crate::ids::{EdgeId, End, HalfEdge, VertexId};
use crate::signature::ConeSignature;

use super::workspace::{StubId, Workspace};
use super::SurgeryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CapKind {
    /// Empty boundary; nothing to glue.
    SmoothCap,
    /// Two germs of equal weight fused into one edge.
    SpliceCap,
    /// Three germs joined at a new trivalent vertex.
    ConeCap,
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapKind::SmoothCap => "smooth",
            CapKind::SpliceCap => "splice",
            CapKind::ConeCap => "cone",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapRecord {
    pub kind: CapKind,
    pub germs: Vec<CutGerm>,
    pub signature: ConeSignature,
    /// The vertex created by a cone cap.
    pub vertex: Option<VertexId>,
    /// The edge produced by a splice cap.
    pub edge: Option<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutOutcome {
    pub graph: SingularGraph,
    pub caps: Vec<CapRecord>,
    /// Input edges that survive under another id, with whether their
    /// orientation was reversed.
    pub renamed: BTreeMap<EdgeId, (EdgeId, bool)>,
}

impl CutOutcome {
    /// Where an input edge ended up, if it survived.
    pub fn resolve(&self, e: EdgeId) -> Option<(EdgeId, bool)> {
        match self.renamed.get(&e) {
            Some(&r) => Some(r),
            None => self.graph.edge(e).map(|_| (e, false)),
        }
    }
}

pub fn apply_cut_and_cap(g: &SingularGraph, x: &XDescription) -> Result<CutOutcome, SurgeryError> {
    x.check(g).map_err(SurgeryError::InconsistentX)?;
    let mut ws = Workspace::new(g);
    let mut stub_of: BTreeMap<(EdgeId, GermSite), StubId> = BTreeMap::new();

    let germs = x.boundary.iter().flat_map(|b| &b.germs);
    for germ in germs.clone() {
        if let GermSite::End(end) = germ.site {
            let s = ws.sever(HalfEdge::new(germ.edge, end))?;
            stub_of.insert((germ.edge, germ.site), s);
        }
    }
    for germ in germs {
        if let GermSite::Pierce { toward: End::Zero } = germ.site {
            let [s0, s1] = ws.pierce(germ.edge, 1)?[0];
            stub_of.insert((germ.edge, GermSite::Pierce { toward: End::Zero }), s0);
            stub_of.insert((germ.edge, GermSite::Pierce { toward: End::One }), s1);
        }
    }
    for &e in &x.interior_edges {
        ws.remove_edge(e);
    }
    for &v in &x.interior_vertices {
        if let Some(h) = ws.attachments(v).first() {
            return Err(SurgeryError::InconsistentX(format!(
                "half-edge {h} still attached to deleted vertex {v}"
            )));
        }
        ws.remove_vertex(v);
    }

    let mut caps = Vec::with_capacity(x.boundary.len());
    for boundary in &x.boundary {
        let stubs: Vec<StubId> = boundary.germs.iter().map(|g| stub_of[&(g.edge, g.site)]).collect();
        let signature = boundary.signature();
        let (kind, vertex, edge) = match stubs[..] {
            [] => (CapKind::SmoothCap, None, None),
            [a, b] => (CapKind::SpliceCap, None, Some(ws.splice(a, b)?)),
            [a, b, c] => (CapKind::ConeCap, Some(ws.cone([a, b, c])?), None),
            _ => return Err(SurgeryError::InconsistentX(format!("{} germs on one boundary", stubs.len()))),
        };
        caps.push(CapRecord { kind, germs: boundary.germs.clone(), signature, vertex, edge });
    }
    // Splice-cap edge ids can be absorbed by a later splice.
    for cap in &mut caps {
        if let Some(e) = cap.edge {
            cap.edge = ws.resolve(e).map(|(e, _)| e);
        }
    }

    let renamed = ws
        .redirects()
        .iter()
        .filter(|(old, _)| g.edge(**old).is_some())
        .map(|(&old, &target)| (old, target))
        .collect();
    let graph = ws.into_graph()?;
    let violations = validate_graph(&graph);
    if !violations.is_empty() {
        return Err(SurgeryError::InvalidResult(violations));
    }
    Ok(CutOutcome { graph, caps, renamed })
}
