//! Attaching a bad piece: the reverse of cut-and-cap.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{validate_graph, SingularGraph};
use crate::ids::{EdgeId, End, VertexId};
use crate::signature::ConeSignature;
use crate::witness::BadnessWitness;

use super::piece::{PieceSpec, TemplateEnd, TemplateMark};
use super::workspace::{StubId, Workspace};
use super::SurgeryError;

/// Where one boundary component of a piece is glued in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AttachmentSite {
    /// A trivalent vertex, removed to expose three stubs.
    Vertex(VertexId),
    /// An interior point of an edge, cut to expose two stubs. Several points
    /// on one edge are placed from end 0 toward end 1 in list order.
    EdgePoint(EdgeId),
    /// A smooth point; exposes nothing.
    Smooth,
}

impl fmt::Display for AttachmentSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttachmentSite::Vertex(v) => write!(f, "vertex {v}"),
            AttachmentSite::EdgePoint(e) => write!(f, "point on {e}"),
            AttachmentSite::Smooth => write!(f, "smooth point"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachOutcome {
    pub graph: SingularGraph,
    pub witness: BadnessWitness,
    /// Input edges absorbed into another edge, with orientation flips.
    pub renamed: BTreeMap<EdgeId, (EdgeId, bool)>,
}

fn mismatch(component: usize, detail: impl Into<String>) -> SurgeryError {
    SurgeryError::SiteMismatch { component, detail: detail.into() }
}

fn site_signature(g: &SingularGraph, component: usize, site: AttachmentSite) -> Result<ConeSignature, SurgeryError> {
    match site {
        AttachmentSite::Vertex(v) => {
            if !g.has_vertex(v) {
                return Err(mismatch(component, format!("no vertex {v}")));
            }
            Ok(g.vertex_signature(v))
        }
        AttachmentSite::EdgePoint(e) => {
            let w = g.weight(e).ok_or_else(|| mismatch(component, format!("no edge {e}")))?;
            Ok(ConeSignature::from_weights([w, w]))
        }
        AttachmentSite::Smooth => Ok(ConeSignature::smooth()),
    }
}

pub fn attach_piece(
    g: &SingularGraph,
    piece: &PieceSpec,
    sites: &[AttachmentSite],
) -> Result<AttachOutcome, SurgeryError> {
    let template = piece.template();
    if sites.len() != template.components {
        return Err(mismatch(
            sites.len().min(template.components),
            format!("{} sites for {} boundary components", sites.len(), template.components),
        ));
    }
    let violations = validate_graph(g);
    if !violations.is_empty() {
        return Err(mismatch(0, format!("graph is invalid: {violations:?}")));
    }
    let expected = piece.boundary_signatures();
    let mut used = BTreeSet::new();
    for (i, &site) in sites.iter().enumerate() {
        let found = site_signature(g, i, site)?;
        if found != expected[i] {
            return Err(mismatch(i, format!("{site} has {found}, piece needs {}", expected[i])));
        }
        if let AttachmentSite::Vertex(v) = site {
            if !used.insert(v) {
                return Err(mismatch(i, format!("vertex {v} used twice")));
            }
        }
    }

    let mut ws = Workspace::new(g);
    let mut site_stubs: Vec<Vec<StubId>> = vec![Vec::new(); sites.len()];
    for (i, &site) in sites.iter().enumerate() {
        if let AttachmentSite::Vertex(v) = site {
            site_stubs[i] = ws.detach_vertex(v)?;
        }
    }
    let mut points: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
    for (i, &site) in sites.iter().enumerate() {
        if let AttachmentSite::EdgePoint(e) = site {
            points.entry(e).or_default().push(i);
        }
    }
    for (e, components) in points {
        for (i, pair) in components.iter().zip(ws.pierce(e, components.len())?) {
            site_stubs[*i] = pair.to_vec();
        }
    }

    let vertices: Vec<VertexId> = (0..template.vertices).map(|_| ws.fresh_vertex()).collect();
    let mut slot_stubs: Vec<Vec<StubId>> = vec![Vec::new(); sites.len()];
    let mut ids = Vec::with_capacity(template.edges.len());
    for edge in &template.edges {
        let Some(ends) = edge.ends else {
            ids.push(ws.add_circle(edge.weight));
            continue;
        };
        let resolved = ends.map(|end| match end {
            TemplateEnd::Vertex(i) => Some(vertices[i]),
            TemplateEnd::Slot(_) => None,
        });
        let (id, stubs) = ws.add_segment(edge.weight, resolved);
        for (end, stub) in ends.iter().zip(stubs) {
            if let (TemplateEnd::Slot(c), Some(s)) = (end, stub) {
                slot_stubs[*c].push(s);
            }
        }
        ids.push(id);
    }

    for (slots, stubs) in slot_stubs.iter_mut().zip(site_stubs.iter_mut()) {
        slots.sort_by_key(|&s| ws.stub_weight(s));
        stubs.sort_by_key(|&s| ws.stub_weight(s));
        for (&a, &b) in slots.iter().zip(stubs.iter()) {
            ws.splice(a, b)?;
        }
    }

    let resolve = |i: usize| ws.resolve(ids[i]).expect("template edges survive attachment");
    let witness = match template.mark {
        TemplateMark::Teardrop(i) => BadnessWitness::teardrop(resolve(i).0),
        TemplateMark::Football { heavy, light } => {
            let (heavy_id, heavy_flip) = resolve(heavy);
            let (light_id, light_flip) = resolve(light);
            // The light slot edge of a two-sided piece runs from the "-"
            // component (end 0) to the "+" component (end 1).
            let side = (template.components == 2).then_some(if heavy_flip ^ light_flip { End::Zero } else { End::One });
            BadnessWitness::football(heavy_id, light_id, side)
        }
    };
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
    Ok(AttachOutcome { graph, witness, renamed })
}
