//! Exhaustive enumeration of small valid singular graphs up to isomorphism.

use std::collections::BTreeSet;

use crate::graph::{validate_graph, SingularGraph};
use crate::ids::VertexId;
use crate::signature::{vertex_triple_is_admissible, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_weight: u32,
    pub max_vertices: usize,
    /// Bound on arcs plus circles.
    pub max_edges: usize,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds { max_weight: 6, max_vertices: 4, max_edges: 6 }
    }
}

/// A graph as vertex count, arcs `(u, v, weight)` with `u <= v`, and circle
/// weights, all sorted.
type Key = (usize, Vec<(usize, usize, u32)>, Vec<u32>);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical_arcs(arcs: &[(usize, usize, u32)], perms: &[Vec<usize>]) -> Vec<(usize, usize, u32)> {
    perms
        .iter()
        .map(|p| {
            let mut mapped: Vec<_> = arcs
                .iter()
                .map(|&(a, b, w)| (p[a].min(p[b]), p[a].max(p[b]), w))
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .min()
        .unwrap_or_default()
}

/// Trivalent multigraph shapes on `n` labelled vertices (loops allowed).
fn shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rem: &mut [u8], last: Option<(usize, usize)>, arcs: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(v) = rem.iter().position(|&r| r > 0) else {
            out.push(arcs.clone());
            return;
        };
        // Arcs from the same first vertex are produced in nondecreasing order.
        let start = match last {
            Some((lv, lu)) if lv == v => lu,
            _ => v,
        };
        for u in start..rem.len() {
            let need = if u == v { 2 } else { 1 };
            if rem[u] < need {
                continue;
            }
            rem[v] -= 1;
            rem[u] -= 1;
            arcs.push((v, u));
            go(rem, Some((v, u)), arcs, out);
            arcs.pop();
            rem[v] += 1;
            rem[u] += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut vec![3; n], None, &mut Vec::new(), &mut out);
    out
}

fn admissible(a: u32, b: u32, c: u32) -> bool {
    vertex_triple_is_admissible(Weight::unchecked(a), Weight::unchecked(b), Weight::unchecked(c))
}

fn weightings(shape: &[(usize, usize)], n: usize, max_weight: u32) -> Vec<Vec<u32>> {
    fn go(
        shape: &[(usize, usize)],
        incident: &[Vec<usize>],
        max_weight: u32,
        w: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let i = w.len();
        if i == shape.len() {
            out.push(w.clone());
            return;
        }
        for x in 2..=max_weight {
            w.push(x);
            let (a, b) = shape[i];
            let ok = [a, b].iter().all(|&v| {
                let inc = &incident[v];
                if inc.iter().any(|&j| j > i) {
                    return true;
                }
                let ws: Vec<u32> = inc.iter().map(|&j| w[j]).collect();
                admissible(ws[0], ws[1], ws[2])
            });
            if ok {
                go(shape, incident, max_weight, w, out);
            }
            w.pop();
        }
    }
    // Incident arc indices per vertex, a loop listed twice.
    let mut incident = vec![Vec::new(); n];
    for (i, &(a, b)) in shape.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut out = Vec::new();
    go(shape, &incident, max_weight, &mut Vec::new(), &mut out);
    out
}

fn circle_multisets(max_count: usize, max_weight: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_count {
        let mut next = Vec::new();
        for c in &frontier {
            let lo = c.last().copied().unwrap_or(2);
            for w in lo..=max_weight {
                let mut d: Vec<u32> = c.clone();
                d.push(w);
                next.push(d);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn build(key: &Key) -> SingularGraph {
    let (n, arcs, circles) = key;
    let mut g = SingularGraph::new();
    for i in 0..*n {
        g.insert_vertex(VertexId(i as u32));
    }
    for &(a, b, w) in arcs {
        g.add_arc(w, VertexId(a as u32), VertexId(b as u32));
    }
    for &w in circles {
        g.add_circle(w);
    }
    g
}

/// Every valid graph within the bounds, one per isomorphism class, in a
/// fixed order.
pub fn enumerate_small_graphs(bounds: EnumerationBounds) -> Vec<SingularGraph> {
    let mut keys: BTreeSet<Key> = BTreeSet::new();
    for n in (0..=bounds.max_vertices).step_by(2) {
        let arc_count = 3 * n / 2;
        if arc_count > bounds.max_edges {
            break;
        }
        let perms = permutations(n);
        let mut weighted: BTreeSet<Vec<(usize, usize, u32)>> = BTreeSet::new();
        let mut seen_shapes = BTreeSet::new();
        for shape in shapes(n) {
            let plain: Vec<(usize, usize, u32)> = shape.iter().map(|&(a, b)| (a, b, 0)).collect();
            if !seen_shapes.insert(canonical_arcs(&plain, &perms)) {
                continue;
            }
            for w in weightings(&shape, n, bounds.max_weight) {
                let arcs: Vec<(usize, usize, u32)> =
                    shape.iter().zip(&w).map(|(&(a, b), &x)| (a, b, x)).collect();
                weighted.insert(canonical_arcs(&arcs, &perms));
            }
        }
        let circles = circle_multisets(bounds.max_edges - arc_count, bounds.max_weight);
        for arcs in &weighted {
            for c in &circles {
                keys.insert((n, arcs.clone(), c.clone()));
            }
        }
    }
    keys.iter()
        .map(build)
        .inspect(|g| debug_assert!(validate_graph(g).is_empty()))
        .collect()
}
