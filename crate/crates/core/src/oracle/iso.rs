//! Isomorphism of small singular graphs by backtracking over vertex maps.

use std::collections::BTreeMap;

use crate::graph::{EdgeShape, SingularGraph};
use crate::ids::VertexId;

/// Isomorphism invariants used to reject quickly: vertex count, sorted arc
/// weights, loop count, sorted circle weights.
pub fn invariants(g: &SingularGraph) -> (usize, Vec<u32>, usize, Vec<u32>) {
    let mut arcs = Vec::new();
    let mut circles = Vec::new();
    for (_, e) in g.edges() {
        match e.shape {
            EdgeShape::Circle => circles.push(e.weight.get()),
            EdgeShape::Arc(_) => arcs.push(e.weight.get()),
        }
    }
    arcs.sort_unstable();
    circles.sort_unstable();
    (g.vertex_count(), arcs, g.loop_count(), circles)
}

type Adjacency = BTreeMap<(VertexId, VertexId), Vec<u32>>;

fn adjacency(g: &SingularGraph) -> Adjacency {
    let mut adj: Adjacency = BTreeMap::new();
    for (_, e) in g.edges() {
        if let EdgeShape::Arc([a, b]) = e.shape {
            adj.entry((a, b)).or_default().push(e.weight.get());
            if a != b {
                adj.entry((b, a)).or_default().push(e.weight.get());
            }
        }
    }
    for w in adj.values_mut() {
        w.sort_unstable();
    }
    adj
}

fn between(adj: &Adjacency, a: VertexId, b: VertexId) -> &[u32] {
    adj.get(&(a, b)).map_or(&[], |v| v.as_slice())
}

/// True iff a weight-preserving bijection of vertices and edges respects
/// incidence and sends circles to circles.
pub fn graphs_isomorphic(g1: &SingularGraph, g2: &SingularGraph) -> bool {
    if invariants(g1) != invariants(g2) {
        return false;
    }
    let (adj1, adj2) = (adjacency(g1), adjacency(g2));
    let left: Vec<VertexId> = g1.vertices().collect();
    let right: Vec<VertexId> = g2.vertices().collect();
    let sig = |g: &SingularGraph, v| g.vertex_signature(v);
    let mut image: Vec<VertexId> = Vec::with_capacity(left.len());
    let mut taken = vec![false; right.len()];

    fn extend(
        depth: usize,
        left: &[VertexId],
        right: &[VertexId],
        fits: &dyn Fn(VertexId, VertexId) -> bool,
        consistent: &dyn Fn(&[VertexId], VertexId, VertexId) -> bool,
        image: &mut Vec<VertexId>,
        taken: &mut [bool],
    ) -> bool {
        if depth == left.len() {
            return true;
        }
        let u = left[depth];
        for (j, &v) in right.iter().enumerate() {
            if taken[j] || !fits(u, v) || !consistent(image, u, v) {
                continue;
            }
            taken[j] = true;
            image.push(v);
            if extend(depth + 1, left, right, fits, consistent, image, taken) {
                return true;
            }
            image.pop();
            taken[j] = false;
        }
        false
    }

    let fits = |u: VertexId, v: VertexId| {
        sig(g1, u) == sig(g2, v) && between(&adj1, u, u) == between(&adj2, v, v)
    };
    let consistent = |image: &[VertexId], u: VertexId, v: VertexId| {
        image
            .iter()
            .enumerate()
            .all(|(i, &w)| between(&adj1, left[i], u) == between(&adj2, w, v))
    };
    extend(0, &left, &right, &fits, &consistent, &mut image, &mut taken)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(w: [u32; 3]) -> SingularGraph {
        let mut g = SingularGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        for x in w {
            g.add_arc(x, a, b);
        }
        g
    }

    #[test]
    fn circles_compare_by_weight() {
        let mut a = SingularGraph::new();
        a.add_circle(2);
        let mut b = SingularGraph::new();
        b.add_circle(2);
        let mut c = SingularGraph::new();
        c.add_circle(3);
        assert!(graphs_isomorphic(&a, &b));
        assert!(!graphs_isomorphic(&a, &c));
    }

    #[test]
    fn theta_order_does_not_matter() {
        assert!(graphs_isomorphic(&theta([3, 2, 2]), &theta([2, 3, 2])));
        assert!(!graphs_isomorphic(&theta([3, 2, 2]), &theta([3, 3, 2])));
    }

    #[test]
    fn dumbbell_is_not_a_theta() {
        let mut d = SingularGraph::new();
        let a = d.add_vertex();
        let b = d.add_vertex();
        d.add_arc(2, a, a);
        d.add_arc(2, a, b);
        d.add_arc(2, b, b);
        assert!(!graphs_isomorphic(&d, &theta([2, 2, 2])));
    }
}
