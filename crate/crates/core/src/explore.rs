//! Unfolding the neighbourhood of a base edge.
//!
//! Starting from an arc `e`, each endpoint is visited through the half-edge
//! of `e` attached there and the two remaining half-edges are recorded as
//! branches, heavier first. A branch can be followed to its far endpoint to
//! obtain the next level. The records are those of a tree mapped into the
//! graph: at every visited vertex the three recorded half-edges are distinct,
//! but different tree nodes may land on the same graph vertex (for a loop,
//! both ends of `e` land on one vertex).

use thiserror::Error;

use crate::graph::SingularGraph;
use crate::ids::{EdgeId, End, HalfEdge, VertexId};
use crate::signature::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExploreError {
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is a circle and has no endpoints")]
    Circle(EdgeId),
    #[error("vertex {vertex} has {degree} half-edges, expected 3")]
    NotTrivalent { vertex: VertexId, degree: usize },
}

/// A half-edge leaving an explored vertex, with the weight of its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub half: HalfEdge,
    pub weight: Weight,
}

/// What is seen at one vertex after arriving through `through`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexView {
    pub vertex: VertexId,
    pub through: HalfEdge,
    /// The heavier of the two other branches; ties go to the smaller half-edge.
    pub heavy: Branch,
    pub light: Branch,
}

impl VertexView {
    /// Both remaining branches have the same weight.
    pub fn balanced(&self) -> bool {
        self.heavy.weight == self.light.weight
    }

    pub fn branches(&self) -> [Branch; 2] {
        [self.heavy, self.light]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalExploration {
    pub base: EdgeId,
    pub weight: Weight,
    /// Views at the endpoint of each end of the base edge, indexed by end.
    pub ends: [VertexView; 2],
}

impl LocalExploration {
    pub fn at(&self, end: End) -> &VertexView {
        &self.ends[end.index()]
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0].vertex == self.ends[1].vertex
    }

    /// The three half-edges at every visited vertex are pairwise distinct.
    pub fn is_locally_injective(&self) -> bool {
        self.ends.iter().all(|v| {
            v.through != v.heavy.half && v.through != v.light.half && v.heavy.half != v.light.half
        })
    }
}

/// Views the vertex at the attached end of `arrival`.
pub fn view_through(g: &SingularGraph, arrival: HalfEdge) -> Result<VertexView, ExploreError> {
    let vertex = g.endpoint(arrival).ok_or(ExploreError::UnknownEdge(arrival.edge))?;
    let halves = g.half_edges_at(vertex);
    if halves.len() != 3 {
        return Err(ExploreError::NotTrivalent { vertex, degree: halves.len() });
    }
    let mut others: Vec<Branch> = halves
        .into_iter()
        .filter(|h| *h != arrival)
        .map(|half| Branch { half, weight: g.weight(half.edge).expect("incident edge exists") })
        .collect();
    debug_assert_eq!(others.len(), 2);
    others.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.half.cmp(&b.half)));
    Ok(VertexView { vertex, through: arrival, heavy: others[0], light: others[1] })
}

/// Follows a branch across its edge and views the far endpoint.
pub fn follow(g: &SingularGraph, branch: Branch) -> Result<VertexView, ExploreError> {
    view_through(g, branch.half.twin())
}

pub fn explore(g: &SingularGraph, base: EdgeId) -> Result<LocalExploration, ExploreError> {
    let edge = g.edge(base).ok_or(ExploreError::UnknownEdge(base))?;
    if edge.is_circle() {
        return Err(ExploreError::Circle(base));
    }
    let ends = [
        view_through(g, HalfEdge::new(base, End::Zero))?,
        view_through(g, HalfEdge::new(base, End::One))?,
    ];
    Ok(LocalExploration { base, weight: edge.weight, ends })
}
