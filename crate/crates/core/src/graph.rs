//! The singular set as a weighted trivalent graph with weighted circles.
//!
//! Arcs record their two end vertices in order (`end0`, `end1`); incidence
//! is derived from the arcs, so a loop contributes two half-edges at its
//! vertex and parallel arcs are ordinary distinct edges. The type can hold
//! malformed graphs; [`validate_graph`] reports what is wrong with them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::ids::{EdgeId, End, HalfEdge, VertexId};
use crate::signature::{vertex_triple_is_admissible, ConeSignature, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeShape {
    /// A singular simple closed curve with no vertex on it.
    Circle,
    /// An edge ending in two vertices, possibly the same one.
    Arc([VertexId; 2]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub weight: Weight,
    pub shape: EdgeShape,
}

impl Edge {
    pub fn arc(weight: Weight, v0: VertexId, v1: VertexId) -> Edge {
        Edge { weight, shape: EdgeShape::Arc([v0, v1]) }
    }

    pub fn circle(weight: Weight) -> Edge {
        Edge { weight, shape: EdgeShape::Circle }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self.shape, EdgeShape::Circle)
    }

    pub fn is_loop(&self) -> bool {
        matches!(self.shape, EdgeShape::Arc([a, b]) if a == b)
    }

    pub fn endpoints(&self) -> Option<[VertexId; 2]> {
        match self.shape {
            EdgeShape::Circle => None,
            EdgeShape::Arc(ends) => Some(ends),
        }
    }

    pub fn endpoint(&self, end: End) -> Option<VertexId> {
        self.endpoints().map(|e| e[end.index()])
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NonTrivalentVertex { vertex: VertexId, degree: usize },
    InadmissibleVertex { vertex: VertexId, weights: [u32; 3] },
    WeightTooSmall { edge: EdgeId, weight: u32 },
    DanglingHalfEdge { edge: EdgeId, end: End, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonTrivalentVertex { vertex, degree } => {
                write!(f, "NonTrivalentVertex {vertex}: degree {degree}")
            }
            Violation::InadmissibleVertex { vertex, weights } => write!(
                f,
                "InadmissibleVertex {vertex}: weights ({},{},{})",
                weights[0], weights[1], weights[2]
            ),
            Violation::WeightTooSmall { edge, weight } => {
                write!(f, "WeightTooSmall {edge}: weight {weight}")
            }
            Violation::DanglingHalfEdge { edge, end, vertex } => {
                write!(f, "DanglingHalfEdge {edge}.{end}: no vertex {vertex}")
            }
        }
    }
}

impl SingularGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> + '_ {
        self.edges.iter().map(|(id, e)| (*id, e))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edges.get(&e)
    }

    pub fn weight(&self, e: EdgeId) -> Option<Weight> {
        self.edges.get(&e).map(|e| e.weight)
    }

    /// Vertex a half-edge is attached to.
    pub fn endpoint(&self, h: HalfEdge) -> Option<VertexId> {
        self.edges.get(&h.edge).and_then(|e| e.endpoint(h.end))
    }

    /// Half-edges attached at `v`, sorted by (edge id, end).
    pub fn half_edges_at(&self, v: VertexId) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for (&id, edge) in &self.edges {
            if let EdgeShape::Arc(ends) = edge.shape {
                for end in End::BOTH {
                    if ends[end.index()] == v {
                        out.push(HalfEdge::new(id, end));
                    }
                }
            }
        }
        out
    }

    /// Incidence lists for every vertex, including vertices nothing attaches to.
    pub fn incidence(&self) -> BTreeMap<VertexId, Vec<HalfEdge>> {
        let mut map: BTreeMap<VertexId, Vec<HalfEdge>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (&id, edge) in &self.edges {
            if let EdgeShape::Arc(ends) = edge.shape {
                for end in End::BOTH {
                    map.entry(ends[end.index()]).or_default().push(HalfEdge::new(id, end));
                }
            }
        }
        map
    }

    pub fn vertex_signature(&self, v: VertexId) -> ConeSignature {
        ConeSignature::from_weights(
            self.half_edges_at(v).iter().filter_map(|h| self.weight(h.edge)),
        )
    }

    /// Smallest identifier strictly above every vertex id in use.
    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.iter().next_back().map_or(0, |v| v.0 + 1))
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.keys().next_back().map_or(0, |e| e.0 + 1))
    }

    pub fn insert_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.insert(v)
    }

    /// Inserts or replaces an edge. Weights are stored as given.
    pub fn insert_edge(&mut self, id: EdgeId, edge: Edge) -> Option<Edge> {
        self.edges.insert(id, edge)
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.remove(&v)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Option<Edge> {
        self.edges.remove(&e)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = self.next_vertex_id();
        self.vertices.insert(v);
        v
    }

    /// Adds an arc with a fresh id. The weight is not checked here.
    pub fn add_arc(&mut self, weight: u32, v0: VertexId, v1: VertexId) -> EdgeId {
        let id = self.next_edge_id();
        self.edges.insert(id, Edge::arc(Weight::unchecked(weight), v0, v1));
        id
    }

    pub fn add_circle(&mut self, weight: u32) -> EdgeId {
        let id = self.next_edge_id();
        self.edges.insert(id, Edge::circle(Weight::unchecked(weight)));
        id
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().map(|e| e.weight.get() as u64).sum()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.values().filter(|e| e.is_loop()).count()
    }

    /// Number of connected components of the graph itself (each circle is
    /// its own component).
    pub fn component_count(&self) -> usize {
        let mut parent: BTreeMap<VertexId, VertexId> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
            let mut root = v;
            while parent[&root] != root {
                root = parent[&root];
            }
            let mut cur = v;
            while parent[&cur] != root {
                let next = parent[&cur];
                parent.insert(cur, root);
                cur = next;
            }
            root
        }
        let mut circles = 0;
        for edge in self.edges.values() {
            match edge.shape {
                EdgeShape::Circle => circles += 1,
                EdgeShape::Arc([a, b]) => {
                    if parent.contains_key(&a) && parent.contains_key(&b) {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        if ra != rb {
                            parent.insert(ra.max(rb), ra.min(rb));
                        }
                    }
                }
            }
        }
        let verts: Vec<VertexId> = parent.keys().copied().collect();
        let roots: BTreeSet<VertexId> = verts.into_iter().map(|v| find(&mut parent, v)).collect();
        roots.len() + circles
    }

    /// Applies identifier maps. Ids missing from a map are kept.
    pub fn relabel(
        &self,
        vmap: &BTreeMap<VertexId, VertexId>,
        emap: &BTreeMap<EdgeId, EdgeId>,
    ) -> SingularGraph {
        let mv = |v: VertexId| *vmap.get(&v).unwrap_or(&v);
        let mut out = SingularGraph::new();
        for &v in &self.vertices {
            out.vertices.insert(mv(v));
        }
        for (&id, edge) in &self.edges {
            let shape = match edge.shape {
                EdgeShape::Circle => EdgeShape::Circle,
                EdgeShape::Arc([a, b]) => EdgeShape::Arc([mv(a), mv(b)]),
            };
            out.edges.insert(*emap.get(&id).unwrap_or(&id), Edge { weight: edge.weight, shape });
        }
        out
    }
}

/// Every violated structural invariant, edges first (by id), then vertices.
pub fn validate_graph(g: &SingularGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    for (id, edge) in g.edges() {
        if !edge.weight.is_valid() {
            out.push(Violation::WeightTooSmall { edge: id, weight: edge.weight.get() });
        }
        if let EdgeShape::Arc(ends) = edge.shape {
            for end in End::BOTH {
                let v = ends[end.index()];
                if !g.has_vertex(v) {
                    out.push(Violation::DanglingHalfEdge { edge: id, end, vertex: v });
                }
            }
        }
    }
    for (v, halves) in g.incidence() {
        if !g.has_vertex(v) {
            continue;
        }
        if halves.len() != 3 {
            out.push(Violation::NonTrivalentVertex { vertex: v, degree: halves.len() });
            continue;
        }
        let w: Vec<Weight> = halves.iter().map(|h| g.weight(h.edge).unwrap()).collect();
        if w.iter().all(|x| x.is_valid()) && !vertex_triple_is_admissible(w[0], w[1], w[2]) {
            let mut weights = [w[0].get(), w[1].get(), w[2].get()];
            weights.sort_unstable();
            out.push(Violation::InadmissibleVertex { vertex: v, weights });
        }
    }
    out
}
