//! A graph under construction whose edges may end in free stubs.
//!
//! Cut-and-cap and attachment both work by exposing stubs (severing a
//! half-edge from its vertex, or cutting an edge at an interior point) and
//! then closing them up again (splicing two stubs, or coning three at a new
//! vertex). Identifiers for new vertices and edges come from counters that
//! start just above the largest id of the input graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Edge, EdgeShape, SingularGraph};
use crate::ids::{EdgeId, End, HalfEdge, VertexId};
use crate::signature::{ConeSignature, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct StubId(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tip {
    Vertex(VertexId),
    Stub(StubId),
}

#[derive(Clone, Copy, Debug)]
enum Body {
    Circle,
    Path([Tip; 2]),
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    weight: Weight,
    body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum WorkspaceError {
    MissingEdge(EdgeId),
    NotAttached(HalfEdge),
    SpliceWeights(Weight, Weight),
    SpliceSelf,
    ConeNotSpherical(ConeSignature),
    LooseStubs(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Workspace {
    vertices: BTreeSet<VertexId>,
    segments: BTreeMap<EdgeId, Segment>,
    stubs: BTreeMap<StubId, (EdgeId, End)>,
    next_vertex: u32,
    next_edge: u32,
    next_stub: u32,
    /// Edges absorbed by a splice: old id to (surviving id, orientation flipped).
    redirect: BTreeMap<EdgeId, (EdgeId, bool)>,
}

impl Workspace {
    pub fn new(g: &SingularGraph) -> Workspace {
        let segments = g
            .edges()
            .map(|(id, e)| {
                let body = match e.shape {
                    EdgeShape::Circle => Body::Circle,
                    EdgeShape::Arc([a, b]) => Body::Path([Tip::Vertex(a), Tip::Vertex(b)]),
                };
                (id, Segment { weight: e.weight, body })
            })
            .collect();
        Workspace {
            vertices: g.vertices().collect(),
            segments,
            stubs: BTreeMap::new(),
            next_vertex: g.next_vertex_id().0,
            next_edge: g.next_edge_id().0,
            next_stub: 0,
            redirect: BTreeMap::new(),
        }
    }

    pub fn fresh_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.insert(v);
        v
    }

    fn fresh_edge(&mut self) -> EdgeId {
        let e = EdgeId(self.next_edge);
        self.next_edge += 1;
        e
    }

    fn fresh_stub(&mut self, edge: EdgeId, end: End) -> StubId {
        let s = StubId(self.next_stub);
        self.next_stub += 1;
        self.stubs.insert(s, (edge, end));
        s
    }

    pub fn stub_weight(&self, s: StubId) -> Weight {
        let (e, _) = self.stubs[&s];
        self.segments[&e].weight
    }

    pub fn add_circle(&mut self, weight: Weight) -> EdgeId {
        let id = self.fresh_edge();
        self.segments.insert(id, Segment { weight, body: Body::Circle });
        id
    }

    /// Adds an edge; a `None` end is left as a new free stub.
    pub fn add_segment(
        &mut self,
        weight: Weight,
        ends: [Option<VertexId>; 2],
    ) -> (EdgeId, [Option<StubId>; 2]) {
        let id = self.fresh_edge();
        let mut stubs = [None, None];
        let mut tips = [Tip::Vertex(VertexId(0)); 2];
        for end in End::BOTH {
            tips[end.index()] = match ends[end.index()] {
                Some(v) => Tip::Vertex(v),
                None => {
                    let s = self.fresh_stub(id, end);
                    stubs[end.index()] = Some(s);
                    Tip::Stub(s)
                }
            };
        }
        self.segments.insert(id, Segment { weight, body: Body::Path(tips) });
        (id, stubs)
    }

    /// Detaches a half-edge from its vertex, leaving a stub.
    pub fn sever(&mut self, h: HalfEdge) -> Result<StubId, WorkspaceError> {
        let seg = self.segments.get(&h.edge).ok_or(WorkspaceError::MissingEdge(h.edge))?;
        match seg.body {
            Body::Path(tips) if matches!(tips[h.end.index()], Tip::Vertex(_)) => {}
            _ => return Err(WorkspaceError::NotAttached(h)),
        }
        let s = self.fresh_stub(h.edge, h.end);
        if let Some(Segment { body: Body::Path(tips), .. }) = self.segments.get_mut(&h.edge) {
            tips[h.end.index()] = Tip::Stub(s);
        }
        Ok(s)
    }

    /// Severs every half-edge at `v`, in (edge, end) order, and removes `v`.
    pub fn detach_vertex(&mut self, v: VertexId) -> Result<Vec<StubId>, WorkspaceError> {
        let halves: Vec<HalfEdge> = self
            .segments
            .iter()
            .flat_map(|(&id, seg)| match seg.body {
                Body::Path(tips) => End::BOTH
                    .into_iter()
                    .filter(|end| tips[end.index()] == Tip::Vertex(v))
                    .map(|end| HalfEdge::new(id, end))
                    .collect::<Vec<_>>(),
                Body::Circle => Vec::new(),
            })
            .collect();
        let stubs = halves.into_iter().map(|h| self.sever(h)).collect::<Result<Vec<_>, _>>()?;
        self.vertices.remove(&v);
        Ok(stubs)
    }

    /// Cuts `e` at `k` interior points, listed from end 0 toward end 1 (for a
    /// circle, in its direction of travel). Each point yields
    /// `[stub running toward end 0, stub running toward end 1]`. The piece
    /// containing end 0 keeps the id `e`; the others are new edges.
    pub fn pierce(&mut self, e: EdgeId, k: usize) -> Result<Vec<[StubId; 2]>, WorkspaceError> {
        let seg = *self.segments.get(&e).ok_or(WorkspaceError::MissingEdge(e))?;
        if k == 0 {
            return Ok(Vec::new());
        }
        // Arc pieces run end 0, point 0, ..., end 1; circle piece i starts at point i.
        let (first_tip, last_tip, pieces) = match seg.body {
            Body::Path([t0, t1]) => (Some(t0), Some(t1), k + 1),
            Body::Circle => (None, None, k),
        };
        let ids: Vec<EdgeId> =
            std::iter::once(e).chain((1..pieces).map(|_| self.fresh_edge())).collect();
        let mut points = Vec::with_capacity(k);
        let mut starts = Vec::with_capacity(pieces);
        let mut finishes = Vec::with_capacity(pieces);
        for (i, &id) in ids.iter().enumerate() {
            let start = match (i, first_tip) {
                (0, Some(t)) => t,
                _ => Tip::Stub(self.fresh_stub(id, End::Zero)),
            };
            let finish = match (i + 1 == pieces, last_tip) {
                (true, Some(t)) => t,
                _ => Tip::Stub(self.fresh_stub(id, End::One)),
            };
            starts.push(start);
            finishes.push(finish);
            self.segments.insert(id, Segment { weight: seg.weight, body: Body::Path([start, finish]) });
        }
        if let Some(Tip::Stub(s)) = last_tip {
            self.stubs.insert(s, (ids[pieces - 1], End::One));
        }
        let stub = |t: Tip| match t {
            Tip::Stub(s) => s,
            Tip::Vertex(_) => unreachable!("pierce points are stubs"),
        };
        for p in 0..k {
            let (before, after) = match seg.body {
                Body::Path(_) => (p, p + 1),
                // Point 0 of a circle sits between the last piece and piece 0.
                Body::Circle => ((p + k - 1) % k, p),
            };
            points.push([stub(finishes[before]), stub(starts[after])]);
        }
        Ok(points)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> bool {
        let Some(seg) = self.segments.remove(&e) else {
            return false;
        };
        if let Body::Path(tips) = seg.body {
            for t in tips {
                if let Tip::Stub(s) = t {
                    self.stubs.remove(&s);
                }
            }
        }
        true
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.remove(&v)
    }

    /// Half-edges still attached to `v`.
    pub fn attachments(&self, v: VertexId) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for (&id, seg) in &self.segments {
            if let Body::Path(tips) = seg.body {
                for end in End::BOTH {
                    if tips[end.index()] == Tip::Vertex(v) {
                        out.push(HalfEdge::new(id, end));
                    }
                }
            }
        }
        out
    }

    /// Fuses two stubs of equal weight. Two stubs of one edge close it into
    /// a circle; otherwise the edge with the larger id is absorbed into the
    /// other, which keeps its orientation. Returns the surviving edge.
    pub fn splice(&mut self, s1: StubId, s2: StubId) -> Result<EdgeId, WorkspaceError> {
        if s1 == s2 {
            return Err(WorkspaceError::SpliceSelf);
        }
        let (e1, end1) = self.stubs[&s1];
        let (e2, end2) = self.stubs[&s2];
        let (w1, w2) = (self.segments[&e1].weight, self.segments[&e2].weight);
        if w1 != w2 {
            return Err(WorkspaceError::SpliceWeights(w1, w2));
        }
        self.stubs.remove(&s1);
        self.stubs.remove(&s2);
        if e1 == e2 {
            self.segments.get_mut(&e1).expect("segment").body = Body::Circle;
            return Ok(e1);
        }
        let ((a, end_a), (b, end_b)) = if e1 < e2 { ((e1, end1), (e2, end2)) } else { ((e2, end2), (e1, end1)) };
        let seg_b = self.segments.remove(&b).expect("segment");
        let Body::Path(tips_b) = seg_b.body else { unreachable!("stub on a circle") };
        let far_b = tips_b[end_b.opposite().index()];
        let flipped = end_a == end_b;
        if let Some(Segment { body: Body::Path(tips_a), .. }) = self.segments.get_mut(&a) {
            tips_a[end_a.index()] = far_b;
        }
        if let Tip::Stub(s) = far_b {
            self.stubs.insert(s, (a, end_a));
        }
        for target in self.redirect.values_mut() {
            if target.0 == b {
                *target = (a, target.1 ^ flipped);
            }
        }
        self.redirect.insert(b, (a, flipped));
        Ok(a)
    }

    /// Joins three stubs at a new vertex.
    pub fn cone(&mut self, stubs: [StubId; 3]) -> Result<VertexId, WorkspaceError> {
        let sig = ConeSignature::from_weights(stubs.iter().map(|&s| self.stub_weight(s)));
        if !sig.is_spherical() {
            return Err(WorkspaceError::ConeNotSpherical(sig));
        }
        let v = self.fresh_vertex();
        for s in stubs {
            let (e, end) = self.stubs.remove(&s).expect("stub");
            if let Some(Segment { body: Body::Path(tips), .. }) = self.segments.get_mut(&e) {
                tips[end.index()] = Tip::Vertex(v);
            }
        }
        Ok(v)
    }

    /// Current id and relative orientation of an input or template edge.
    pub fn resolve(&self, e: EdgeId) -> Option<(EdgeId, bool)> {
        match self.redirect.get(&e) {
            Some(&target) => Some(target),
            None if self.segments.contains_key(&e) => Some((e, false)),
            None => None,
        }
    }

    pub fn redirects(&self) -> &BTreeMap<EdgeId, (EdgeId, bool)> {
        &self.redirect
    }

    pub fn into_graph(self) -> Result<SingularGraph, WorkspaceError> {
        if !self.stubs.is_empty() {
            return Err(WorkspaceError::LooseStubs(self.stubs.len()));
        }
        let mut g = SingularGraph::new();
        for v in self.vertices {
            g.insert_vertex(v);
        }
        for (id, seg) in self.segments {
            let edge = match seg.body {
                Body::Circle => Edge::circle(seg.weight),
                Body::Path([Tip::Vertex(a), Tip::Vertex(b)]) => Edge::arc(seg.weight, a, b),
                Body::Path(_) => unreachable!("stubs were checked"),
            };
            g.insert_edge(id, edge);
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: u32) -> Weight {
        Weight::new(n).unwrap()
    }

    #[test]
    fn pierce_then_splice_restores_an_arc() {
        let mut g = SingularGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        let e = g.add_arc(2, a, b);
        let mut ws = Workspace::new(&g);
        let [[p0, p1], [q0, q1]]: [[StubId; 2]; 2] = ws.pierce(e, 2).unwrap().try_into().unwrap();
        ws.splice(p0, p1).unwrap();
        ws.splice(q1, q0).unwrap();
        let out = ws.into_graph().unwrap();
        assert_eq!(out, g);
    }

    #[test]
    fn circle_pierced_once_closes_back_up() {
        let mut g = SingularGraph::new();
        let c = g.add_circle(3);
        let mut ws = Workspace::new(&g);
        let [s0, s1] = ws.pierce(c, 1).unwrap()[0];
        assert_eq!(ws.splice(s0, s1).unwrap(), c);
        assert_eq!(ws.into_graph().unwrap(), g);
    }

    #[test]
    fn circle_pierced_twice_has_two_pieces() {
        let mut g = SingularGraph::new();
        let c = g.add_circle(2);
        let mut ws = Workspace::new(&g);
        let pts = ws.pierce(c, 2).unwrap();
        ws.splice(pts[0][0], pts[0][1]).unwrap();
        ws.splice(pts[1][0], pts[1][1]).unwrap();
        let out = ws.into_graph().unwrap();
        assert_eq!(out.edge_count(), 1);
        assert!(out.edge(c).unwrap().is_circle());
    }

    #[test]
    fn splice_tracks_orientation() {
        let mut g = SingularGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        let e0 = g.add_arc(2, a, a);
        let e1 = g.add_arc(2, b, b);
        let mut ws = Workspace::new(&g);
        let s0 = ws.sever(HalfEdge::new(e0, End::One)).unwrap();
        let s1 = ws.sever(HalfEdge::new(e1, End::One)).unwrap();
        assert_eq!(ws.splice(s0, s1).unwrap(), e0);
        assert_eq!(ws.resolve(e1), Some((e0, true)));
        let s = ws.sever(HalfEdge::new(e0, End::One)).unwrap();
        assert_eq!(ws.stub_weight(s), w(2));
    }

    #[test]
    fn splice_rejects_unequal_weights_and_cone_rejects_bad_triples() {
        let mut g = SingularGraph::new();
        let c2 = g.add_circle(2);
        let c3 = g.add_circle(3);
        let mut ws = Workspace::new(&g);
        let [a, _] = ws.pierce(c2, 1).unwrap()[0];
        let [b, _] = ws.pierce(c3, 1).unwrap()[0];
        assert_eq!(ws.splice(a, b), Err(WorkspaceError::SpliceWeights(w(2), w(3))));

        let mut g = SingularGraph::new();
        let c = g.add_circle(3);
        let mut ws = Workspace::new(&g);
        let pts = ws.pierce(c, 2).unwrap();
        let r = ws.cone([pts[0][0], pts[0][1], pts[1][0]]);
        assert!(matches!(r, Err(WorkspaceError::ConeNotSpherical(_))));
    }

    #[test]
    fn loose_stubs_are_reported() {
        let mut g = SingularGraph::new();
        let c = g.add_circle(2);
        let mut ws = Workspace::new(&g);
        ws.pierce(c, 1).unwrap();
        assert_eq!(ws.into_graph().unwrap_err(), WorkspaceError::LooseStubs(2));
    }
}
