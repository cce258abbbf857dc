//! Local pictures around a declared teardrop or bad football.
//!
//! Each classifier walks a fixed decision order and returns an
//! [`XDescription`]: the form reached, the vertices and edges that lie
//! entirely inside the suborbifold `X`, and the germs where surviving edges
//! cross its boundary, grouped by boundary sphere.
//!
//! Teardrop order: circle, loop (4.a/4.b), parallel arc (5.a/5.b), then the
//! balanced/unbalanced split at the two endpoints (1, 2, 3, 6).
//! Football order: a circle among the two edges, distinct endpoints of the
//! heavy edge (1), heavy edge a loop (2).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::explore::{explore, follow, view_through, Branch, ExploreError, VertexView};
use crate::graph::{validate_graph, EdgeShape, SingularGraph, Violation};
use crate::ids::{EdgeId, End, HalfEdge, VertexId};
use crate::signature::{ConeSignature, Weight};
use crate::witness::{BadnessWitness, FootballWitness, TeardropWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    TdSmooth,
    TdForm1,
    TdForm2,
    TdForm3,
    TdForm4a,
    TdForm4b,
    TdForm5a,
    TdForm5b,
    TdForm6,
    FbSmooth,
    FbForm1,
    FbForm2,
}

impl Form {
    pub const ALL: [Form; 12] = [
        Form::TdSmooth,
        Form::TdForm1,
        Form::TdForm2,
        Form::TdForm3,
        Form::TdForm4a,
        Form::TdForm4b,
        Form::TdForm5a,
        Form::TdForm5b,
        Form::TdForm6,
        Form::FbSmooth,
        Form::FbForm1,
        Form::FbForm2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Form::TdSmooth => "TD_Smooth",
            Form::TdForm1 => "TD_Form1",
            Form::TdForm2 => "TD_Form2",
            Form::TdForm3 => "TD_Form3",
            Form::TdForm4a => "TD_Form4a",
            Form::TdForm4b => "TD_Form4b",
            Form::TdForm5a => "TD_Form5a",
            Form::TdForm5b => "TD_Form5b",
            Form::TdForm6 => "TD_Form6",
            Form::FbSmooth => "FB_Smooth",
            Form::FbForm1 => "FB_Form1",
            Form::FbForm2 => "FB_Form2",
        }
    }

    pub fn is_teardrop(self) -> bool {
        !matches!(self, Form::FbSmooth | Form::FbForm1 | Form::FbForm2)
    }

    pub fn underlying(self) -> Underlying {
        match self {
            Form::TdForm1 | Form::TdForm2 | Form::TdForm3 | Form::FbForm1 => {
                Underlying::SphereTimesInterval
            }
            _ => Underlying::PuncturedSphereTimesCircle,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown form id `{0}`")]
pub struct UnknownForm(pub String);

impl FromStr for Form {
    type Err = UnknownForm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Form::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownForm(s.to_string()))
    }
}

/// Underlying space of `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Underlying {
    /// `S2 x I`, two boundary spheres.
    SphereTimesInterval,
    /// `(S2 x S1) \ B3`, one boundary sphere.
    PuncturedSphereTimesCircle,
}

impl Underlying {
    pub fn tag(self) -> &'static str {
        match self {
            Underlying::SphereTimesInterval => "S2xI",
            Underlying::PuncturedSphereTimesCircle => "S2xS1minusB3",
        }
    }

    pub fn from_tag(s: &str) -> Option<Underlying> {
        match s {
            "S2xI" => Some(Underlying::SphereTimesInterval),
            "S2xS1minusB3" => Some(Underlying::PuncturedSphereTimesCircle),
            _ => None,
        }
    }

    pub fn boundary_count(self) -> usize {
        match self {
            Underlying::SphereTimesInterval => 2,
            Underlying::PuncturedSphereTimesCircle => 1,
        }
    }
}

impl fmt::Display for Underlying {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Where a surviving edge is severed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GermSite {
    /// Next to the (deleted) vertex at this end of the arc.
    End(End),
    /// At an interior pierce point; the germ is the piece running toward
    /// the given end. A pierced edge contributes one germ per direction.
    Pierce { toward: End },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutGerm {
    pub edge: EdgeId,
    pub site: GermSite,
    pub weight: Weight,
}

impl CutGerm {
    fn at(b: Branch) -> CutGerm {
        CutGerm { edge: b.half.edge, site: GermSite::End(b.half.end), weight: b.weight }
    }

    fn pierce(edge: EdgeId, toward: End, weight: Weight) -> CutGerm {
        CutGerm { edge, site: GermSite::Pierce { toward }, weight }
    }
}

impl fmt::Display for CutGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.site {
            GermSite::End(end) => write!(f, "{}.{}", self.edge, end),
            GermSite::Pierce { toward } => write!(f, "{}~{}", self.edge, toward),
        }
    }
}

/// The germs crossing one boundary sphere of `X`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CutBoundary {
    pub germs: Vec<CutGerm>,
}

impl CutBoundary {
    pub fn new(germs: Vec<CutGerm>) -> Self {
        CutBoundary { germs }
    }

    pub fn signature(&self) -> ConeSignature {
        ConeSignature::from_weights(self.germs.iter().map(|g| g.weight))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XDescription {
    pub form: Form,
    pub interior_vertices: BTreeSet<VertexId>,
    pub interior_edges: BTreeSet<EdgeId>,
    pub boundary: Vec<CutBoundary>,
    pub underlying: Underlying,
}

impl XDescription {
    pub fn signatures(&self) -> Vec<ConeSignature> {
        self.boundary.iter().map(|b| b.signature()).collect()
    }

    /// One-line summary, e.g. `TD_Form2  boundary: S2(2,2) ; S2(2,2,3)  underlying: S2xI`.
    pub fn summary(&self) -> String {
        let sigs: Vec<String> = self.signatures().iter().map(|s| s.to_string()).collect();
        format!("{}  boundary: {}  underlying: {}", self.form, sigs.join(" ; "), self.underlying)
    }

    /// Checks the description against the graph it is meant to cut.
    pub fn check(&self, g: &SingularGraph) -> Result<(), String> {
        if self.boundary.is_empty() || self.boundary.len() > 2 {
            return Err(format!("{} boundary components", self.boundary.len()));
        }
        if self.boundary.len() != self.underlying.boundary_count() {
            return Err(format!(
                "{} boundary components but underlying space {}",
                self.boundary.len(),
                self.underlying
            ));
        }
        for sig in self.signatures() {
            if !sig.is_spherical() {
                return Err(format!("boundary {sig} is not spherical"));
            }
        }
        for b in &self.boundary {
            if !matches!(b.germs.len(), 0 | 2 | 3) {
                return Err(format!("boundary component with {} germs", b.germs.len()));
            }
        }
        for &v in &self.interior_vertices {
            if !g.has_vertex(v) {
                return Err(format!("interior vertex {v} does not exist"));
            }
        }
        for &e in &self.interior_edges {
            let edge = g.edge(e).ok_or_else(|| format!("interior edge {e} does not exist"))?;
            if let EdgeShape::Arc(ends) = edge.shape {
                if ends.iter().any(|v| !self.interior_vertices.contains(v)) {
                    return Err(format!("interior edge {e} leaves the interior"));
                }
            }
        }
        let mut seen = BTreeSet::new();
        let mut pierced: BTreeSet<(EdgeId, End)> = BTreeSet::new();
        for germ in self.boundary.iter().flat_map(|b| &b.germs) {
            if !seen.insert((germ.edge, germ.site)) {
                return Err(format!("germ {germ} listed twice"));
            }
            if self.interior_edges.contains(&germ.edge) {
                return Err(format!("germ {germ} lies on an interior edge"));
            }
            let edge = g.edge(germ.edge).ok_or_else(|| format!("germ {germ} on missing edge"))?;
            if edge.weight != germ.weight {
                return Err(format!("germ {germ} records the wrong weight"));
            }
            match germ.site {
                GermSite::End(end) => {
                    let v = edge.endpoint(end).ok_or_else(|| format!("germ {germ} on a circle"))?;
                    if !self.interior_vertices.contains(&v) {
                        return Err(format!("germ {germ} is not next to an interior vertex"));
                    }
                }
                GermSite::Pierce { toward } => {
                    pierced.insert((germ.edge, toward));
                }
            }
        }
        for &(e, toward) in &pierced {
            if !pierced.contains(&(e, toward.opposite())) {
                return Err(format!("edge {e} is pierced on one side only"));
            }
        }
        for &v in &self.interior_vertices {
            for h in g.half_edges_at(v) {
                let covered = self.interior_edges.contains(&h.edge)
                    || seen.contains(&(h.edge, GermSite::End(h.end)));
                if !covered {
                    return Err(format!("half-edge {h} at interior vertex {v} is neither cut nor interior"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph is invalid: {0:?}")]
    InvalidGraph(Vec<Violation>),
    #[error("witness refers to missing edge {0}")]
    UnknownEdge(EdgeId),
    #[error("witness inconsistent with graph: {0}")]
    WitnessInconsistent(String),
}

impl From<ExploreError> for ClassifyError {
    fn from(e: ExploreError) -> Self {
        ClassifyError::WitnessInconsistent(e.to_string())
    }
}

fn inconsistent(msg: impl Into<String>) -> ClassifyError {
    ClassifyError::WitnessInconsistent(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ClassifyError> {
    if cond {
        Ok(())
    } else {
        Err(ClassifyError::WitnessInconsistent(msg()))
    }
}

fn check_graph(g: &SingularGraph) -> Result<(), ClassifyError> {
    let violations = validate_graph(g);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ClassifyError::InvalidGraph(violations))
    }
}

fn finish(
    g: &SingularGraph,
    form: Form,
    vertices: impl IntoIterator<Item = VertexId>,
    edges: impl IntoIterator<Item = EdgeId>,
    boundary: Vec<Vec<CutGerm>>,
) -> Result<XDescription, ClassifyError> {
    let x = XDescription {
        form,
        interior_vertices: vertices.into_iter().collect(),
        interior_edges: edges.into_iter().collect(),
        boundary: boundary.into_iter().map(CutBoundary::new).collect(),
        underlying: form.underlying(),
    };
    x.check(g).map_err(|msg| inconsistent(format!("{form}: {msg}")))?;
    Ok(x)
}

pub fn classify(g: &SingularGraph, w: &BadnessWitness) -> Result<XDescription, ClassifyError> {
    match w {
        BadnessWitness::Teardrop(t) => classify_teardrop(g, t),
        BadnessWitness::Football(f) => classify_football(g, f),
    }
}

pub fn classify_teardrop(g: &SingularGraph, w: &TeardropWitness) -> Result<XDescription, ClassifyError> {
    check_graph(g)?;
    let e = w.edge;
    let edge = g.edge(e).ok_or(ClassifyError::UnknownEdge(e))?;
    let [v0, v1] = match edge.shape {
        EdgeShape::Circle => {
            return finish(g, Form::TdSmooth, [], [e], vec![vec![]]);
        }
        EdgeShape::Arc(ends) => ends,
    };
    if v0 == v1 {
        return teardrop_on_loop(g, e);
    }
    if let Some(x) = teardrop_with_parallel(g, e, v0, v1)? {
        return Ok(x);
    }
    teardrop_on_embedded_arc(g, e)
}

fn teardrop_on_loop(g: &SingularGraph, e: EdgeId) -> Result<XDescription, ClassifyError> {
    let at_v = view_through(g, HalfEdge::new(e, End::Zero))?;
    let v = at_v.vertex;
    // The view from end 0 sees end 1 of the loop and the one free slot.
    let third = if at_v.heavy.half == HalfEdge::new(e, End::One) { at_v.light } else { at_v.heavy };
    ensure(third.half.edge != e, || format!("loop {e} has no third edge"))?;
    let far = follow(g, third)?;
    ensure(far.vertex != v, || format!("third edge at loop {e} returns to its vertex"))?;
    if far.balanced() {
        return finish(
            g,
            Form::TdForm4a,
            [v, far.vertex],
            [e, third.half.edge],
            vec![vec![CutGerm::at(far.heavy), CutGerm::at(far.light)]],
        );
    }
    let next = follow(g, far.heavy)?;
    ensure(next.vertex != v && next.vertex != far.vertex, || {
        format!("heavier edge beyond loop {e} returns into the explored region")
    })?;
    finish(
        g,
        Form::TdForm4b,
        [v, far.vertex, next.vertex],
        [e, third.half.edge, far.heavy.half.edge],
        vec![vec![CutGerm::at(far.light), CutGerm::at(next.heavy), CutGerm::at(next.light)]],
    )
}

/// The half-edge at `v` that is neither of the two given ones.
fn remaining_at(g: &SingularGraph, v: VertexId, used: [HalfEdge; 2]) -> Result<Branch, ClassifyError> {
    let rest: Vec<HalfEdge> =
        g.half_edges_at(v).into_iter().filter(|h| !used.contains(h)).collect();
    ensure(rest.len() == 1, || format!("vertex {v} does not have exactly one free slot"))?;
    Ok(Branch { half: rest[0], weight: g.weight(rest[0].edge).expect("edge exists") })
}

fn half_at(g: &SingularGraph, edge: EdgeId, v: VertexId) -> HalfEdge {
    let ends = g.edge(edge).and_then(|e| e.endpoints()).expect("arc");
    let end = if ends[0] == v { End::Zero } else { End::One };
    HalfEdge::new(edge, end)
}

fn teardrop_with_parallel(
    g: &SingularGraph,
    e: EdgeId,
    v0: VertexId,
    v1: VertexId,
) -> Result<Option<XDescription>, ClassifyError> {
    let parallel = g
        .edges()
        .filter(|(id, edge)| {
            *id != e
                && matches!(edge.shape, EdgeShape::Arc([a, b]) if (a == v0 && b == v1) || (a == v1 && b == v0))
        })
        .max_by(|(ia, a), (ib, b)| a.weight.cmp(&b.weight).then(ib.cmp(ia)))
        .map(|(id, _)| id);
    let Some(star) = parallel else {
        return Ok(None);
    };
    let thirds = [v0, v1].map(|v| {
        remaining_at(g, v, [half_at(g, e, v), half_at(g, star, v)])
    });
    let [t0, t1] = [thirds[0].clone()?, thirds[1].clone()?];
    if t0.weight == t1.weight {
        return finish(
            g,
            Form::TdForm5a,
            [v0, v1],
            [e, star],
            vec![vec![CutGerm::at(t0), CutGerm::at(t1)]],
        )
        .map(Some);
    }
    let (light, heavy) = if t0.weight < t1.weight { (t0, t1) } else { (t1, t0) };
    let far = follow(g, heavy)?;
    ensure(far.vertex != v0 && far.vertex != v1, || {
        format!("heavier third edge {} returns to the parallel pair", heavy.half.edge)
    })?;
    finish(
        g,
        Form::TdForm5b,
        [v0, v1, far.vertex],
        [e, star, heavy.half.edge],
        vec![vec![CutGerm::at(light), CutGerm::at(far.heavy), CutGerm::at(far.light)]],
    )
    .map(Some)
}

fn teardrop_on_embedded_arc(g: &SingularGraph, e: EdgeId) -> Result<XDescription, ClassifyError> {
    let ex = explore(g, e)?;
    debug_assert!(ex.is_locally_injective());
    let [a, b] = ex.ends;
    // "+" is the balanced end when exactly one end is balanced, otherwise the
    // end at the smaller vertex id.
    let (mut plus, mut minus) = if a.balanced() != b.balanced() {
        if a.balanced() { (a, b) } else { (b, a) }
    } else if a.vertex < b.vertex {
        (a, b)
    } else {
        (b, a)
    };
    let two_germs = |v: &VertexView| vec![CutGerm::at(v.heavy), CutGerm::at(v.light)];

    match (plus.balanced(), minus.balanced()) {
        (true, true) => finish(
            g,
            Form::TdForm1,
            [plus.vertex, minus.vertex],
            [e],
            vec![two_germs(&plus), two_germs(&minus)],
        ),
        (true, false) => {
            let mm = follow(g, minus.heavy)?;
            ensure(mm.vertex != minus.vertex && mm.vertex != plus.vertex, || {
                format!("heavier branch at {} does not lead away from {e}", minus.vertex)
            })?;
            finish(
                g,
                Form::TdForm2,
                [plus.vertex, minus.vertex, mm.vertex],
                [e, minus.heavy.half.edge],
                vec![
                    two_germs(&plus),
                    vec![CutGerm::at(minus.light), CutGerm::at(mm.heavy), CutGerm::at(mm.light)],
                ],
            )
        }
        (false, false) => {
            let pp = follow(g, plus.heavy)?;
            let mm = follow(g, minus.heavy)?;
            for far in [&pp, &mm] {
                ensure(far.vertex != plus.vertex && far.vertex != minus.vertex, || {
                    format!("heavier branch returns to an endpoint of {e}")
                })?;
            }
            if pp.vertex != mm.vertex {
                return finish(
                    g,
                    Form::TdForm3,
                    [plus.vertex, minus.vertex, pp.vertex, mm.vertex],
                    [e, plus.heavy.half.edge, minus.heavy.half.edge],
                    vec![
                        vec![CutGerm::at(plus.light), CutGerm::at(pp.heavy), CutGerm::at(pp.light)],
                        vec![CutGerm::at(minus.light), CutGerm::at(mm.heavy), CutGerm::at(mm.light)],
                    ],
                );
            }
            if minus.heavy.weight > plus.heavy.weight {
                std::mem::swap(&mut plus, &mut minus);
            }
            let meet = pp.vertex;
            let star = remaining_at(g, meet, [plus.heavy.half.twin(), minus.heavy.half.twin()])?;
            let (a, ap, abp, am, abm, astar) = (
                ex.weight.get(),
                plus.heavy.weight.get(),
                plus.light.weight.get(),
                minus.heavy.weight.get(),
                minus.light.weight.get(),
                star.weight.get(),
            );
            ensure(astar == 2 && am == 3 && abm == 2, || {
                format!("closing edge weight {astar} and lighter side ({am},{abm}) are not (2, 3, 2)")
            })?;
            ensure((3..=5).contains(&ap) && (2..=3).contains(&abp) && a <= 5, || {
                format!("heavier side ({ap},{abp}) with base weight {a} outside the admissible labels")
            })?;
            finish(
                g,
                Form::TdForm6,
                [plus.vertex, minus.vertex, meet],
                [e, plus.heavy.half.edge, minus.heavy.half.edge],
                vec![vec![CutGerm::at(plus.light), CutGerm::at(minus.light), CutGerm::at(star)]],
            )
        }
        (false, true) => unreachable!("the balanced end is always chosen as +"),
    }
}

pub fn classify_football(g: &SingularGraph, w: &FootballWitness) -> Result<XDescription, ClassifyError> {
    check_graph(g)?;
    let (e, f) = (w.heavy, w.light);
    let heavy = *g.edge(e).ok_or(ClassifyError::UnknownEdge(e))?;
    let light = *g.edge(f).ok_or(ClassifyError::UnknownEdge(f))?;
    ensure(e != f, || format!("heavy and light edge are both {e}"))?;
    ensure(heavy.weight > light.weight, || {
        format!("heavy edge {e} (weight {}) is not heavier than {f} (weight {})", heavy.weight, light.weight)
    })?;
    let pierce_both = |edge: EdgeId, weight: Weight| {
        vec![CutGerm::pierce(edge, End::Zero, weight), CutGerm::pierce(edge, End::One, weight)]
    };

    if heavy.is_circle() {
        return finish(g, Form::FbSmooth, [], [e], vec![pierce_both(f, light.weight)]);
    }
    if light.is_circle() {
        return finish(g, Form::FbSmooth, [], [f], vec![pierce_both(e, heavy.weight)]);
    }
    let [v0, v1] = heavy.endpoints().expect("arc");
    if v0 != v1 {
        let side = w
            .light_plus_side
            .ok_or_else(|| inconsistent(format!("football on {e}: side datum for {f} is required")))?;
        let minus = view_through(g, HalfEdge::new(e, End::Zero))?;
        let plus = view_through(g, HalfEdge::new(e, End::One))?;
        return finish(
            g,
            Form::FbForm1,
            [v0, v1],
            [e],
            vec![
                vec![
                    CutGerm::pierce(f, side.opposite(), light.weight),
                    CutGerm::at(minus.heavy),
                    CutGerm::at(minus.light),
                ],
                vec![
                    CutGerm::pierce(f, side, light.weight),
                    CutGerm::at(plus.heavy),
                    CutGerm::at(plus.light),
                ],
            ],
        );
    }
    let third = remaining_at(g, v0, [HalfEdge::new(e, End::Zero), HalfEdge::new(e, End::One)])?;
    let (b, a, astar) = (heavy.weight.get(), light.weight.get(), third.weight.get());
    ensure((a, b, astar) == (2, 3, 2), || {
        format!("football on loop {e}: weights (a, b, a*) = ({a}, {b}, {astar}), expected (2, 3, 2)")
    })?;
    let mut germs = pierce_both(f, light.weight);
    germs.push(CutGerm::at(third));
    finish(g, Form::FbForm2, [v0], [e], vec![germs])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigs(x: &XDescription) -> Vec<Vec<u32>> {
        x.signatures().iter().map(|s| s.values()).collect()
    }

    /// e (3) from v- with branches (2,2) to v+ with branches (2,4); the
    /// weight-4 edge runs to a vertex with branches (2,3).
    pub(crate) fn form2_example() -> (SingularGraph, EdgeId) {
        let mut g = SingularGraph::new();
        let vm = g.add_vertex();
        let vp = g.add_vertex();
        let far = g.add_vertex();
        let hub = g.add_vertex();
        let e = g.add_arc(3, vm, vp);
        g.add_arc(2, vm, vm);
        g.add_arc(4, vp, far);
        g.add_arc(2, vp, hub);
        g.add_arc(2, far, hub);
        g.add_arc(3, far, hub);
        assert!(validate_graph(&g).is_empty());
        (g, e)
    }

    #[test]
    fn form2_example_classifies() {
        let (g, e) = form2_example();
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm2);
        assert_eq!(sigs(&x), vec![vec![2, 2], vec![2, 2, 3]]);
        assert_eq!(x.underlying, Underlying::SphereTimesInterval);
        assert_eq!(x.summary(), "TD_Form2  boundary: S2(2,2) ; S2(2,2,3)  underlying: S2xI");
    }

    #[test]
    fn circle_teardrop_is_smooth() {
        let mut g = SingularGraph::new();
        let c = g.add_circle(5);
        let x = classify_teardrop(&g, &TeardropWitness { edge: c }).unwrap();
        assert_eq!(x.form, Form::TdSmooth);
        assert_eq!(sigs(&x), vec![Vec::<u32>::new()]);
        assert_eq!(x.underlying, Underlying::PuncturedSphereTimesCircle);
    }

    #[test]
    fn loop_with_balanced_far_vertex_is_form4a() {
        let mut g = SingularGraph::new();
        let v = g.add_vertex();
        let w = g.add_vertex();
        let e = g.add_arc(3, v, v);
        g.add_arc(2, v, w);
        g.add_arc(3, w, w);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm4a);
        assert_eq!(sigs(&x), vec![vec![3, 3]]);
    }

    #[test]
    fn loop_with_unbalanced_far_vertex_is_form4b() {
        let mut g = SingularGraph::new();
        let v = g.add_vertex();
        let p = g.add_vertex();
        let w = g.add_vertex();
        let y = g.add_vertex();
        let e = g.add_arc(3, v, v);
        g.add_arc(2, v, p);
        g.add_arc(3, p, w);
        g.add_arc(2, p, y);
        g.add_arc(2, w, y);
        g.add_arc(2, w, y);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm4b);
        assert_eq!(sigs(&x), vec![vec![2, 2, 2]]);
        assert_eq!(x.interior_vertices.len(), 3);
    }

    #[test]
    fn theta_prefers_parallel_rule() {
        let mut g = SingularGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        let e = g.add_arc(3, a, b);
        g.add_arc(2, a, b);
        g.add_arc(2, a, b);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm5a);
        assert_eq!(sigs(&x), vec![vec![2, 2]]);
        // Tie between the two weight-2 arcs goes to the smaller id.
        assert!(x.interior_edges.contains(&EdgeId(1)));
    }

    #[test]
    fn parallel_with_unequal_thirds_is_form5b() {
        let mut g = SingularGraph::new();
        let vm = g.add_vertex();
        let vp = g.add_vertex();
        let w = g.add_vertex();
        let y = g.add_vertex();
        let e = g.add_arc(2, vm, vp);
        g.add_arc(2, vm, vp);
        g.add_arc(2, vm, y);
        g.add_arc(3, vp, w);
        g.add_arc(2, w, y);
        g.add_arc(2, w, y);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm5b);
        assert_eq!(sigs(&x), vec![vec![2, 2, 2]]);
    }

    #[test]
    fn balanced_ends_give_form1() {
        let mut g = SingularGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        let e = g.add_arc(3, a, b);
        g.add_arc(2, a, a);
        g.add_arc(2, b, b);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm1);
        assert_eq!(sigs(&x), vec![vec![2, 2], vec![2, 2]]);
    }

    fn form36_graph(close: bool) -> (SingularGraph, EdgeId) {
        // e (2) between vp and vm, both unbalanced.
        let mut g = SingularGraph::new();
        let vp = g.add_vertex();
        let vm = g.add_vertex();
        let e = g.add_arc(2, vm, vp);
        if close {
            let u = g.add_vertex();
            let y = g.add_vertex();
            g.add_arc(4, vp, u);
            g.add_arc(3, vm, u);
            g.add_arc(3, vp, y);
            g.add_arc(2, vm, y);
            g.add_arc(2, u, y);
        } else {
            let pp = g.add_vertex();
            let mm = g.add_vertex();
            let q = g.add_vertex();
            let r = g.add_vertex();
            g.add_arc(3, vp, pp);
            g.add_arc(2, pp, pp);
            g.add_arc(3, vm, mm);
            g.add_arc(2, mm, mm);
            g.add_arc(2, vp, q);
            g.add_arc(2, vm, q);
            g.add_arc(2, q, r);
            g.add_arc(2, r, r);
        }
        assert_eq!(validate_graph(&g), vec![]);
        (g, e)
    }

    #[test]
    fn unbalanced_ends_give_form3_or_form6() {
        let (g, e) = form36_graph(false);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm3);
        assert_eq!(sigs(&x), vec![vec![2, 2, 2], vec![2, 2, 2]]);

        let (g, e) = form36_graph(true);
        let x = classify_teardrop(&g, &TeardropWitness { edge: e }).unwrap();
        assert_eq!(x.form, Form::TdForm6);
        assert_eq!(sigs(&x), vec![vec![2, 2, 3]]);
        assert_eq!(x.underlying, Underlying::PuncturedSphereTimesCircle);
    }

    #[test]
    fn football_on_loop_is_form2() {
        let mut g = SingularGraph::new();
        let v = g.add_vertex();
        let w = g.add_vertex();
        let e = g.add_arc(3, v, v);
        g.add_arc(2, v, w);
        let f = g.add_arc(2, w, w);
        let x = classify_football(&g, &FootballWitness { heavy: e, light: f, light_plus_side: None })
            .unwrap();
        assert_eq!(x.form, Form::FbForm2);
        assert_eq!(sigs(&x), vec![vec![2, 2, 2]]);
    }

    #[test]
    fn football_on_circle_is_smooth() {
        let mut g = SingularGraph::new();
        let e = g.add_circle(5);
        let v = g.add_vertex();
        let w = g.add_vertex();
        let f = g.add_arc(2, v, w);
        g.add_arc(2, v, w);
        g.add_arc(2, v, w);
        let x = classify_football(&g, &FootballWitness { heavy: e, light: f, light_plus_side: None })
            .unwrap();
        assert_eq!(x.form, Form::FbSmooth);
        assert_eq!(sigs(&x), vec![vec![2, 2]]);
        assert_eq!(x.interior_edges, BTreeSet::from([e]));

        // Light circle, heavy arc: the heavy edge is pierced instead.
        let mut g = SingularGraph::new();
        let f = g.add_circle(2);
        let v = g.add_vertex();
        let w = g.add_vertex();
        let e = g.add_arc(3, v, w);
        g.add_arc(2, v, w);
        g.add_arc(2, v, w);
        let x = classify_football(&g, &FootballWitness { heavy: e, light: f, light_plus_side: None })
            .unwrap();
        assert_eq!(sigs(&x), vec![vec![3, 3]]);
    }

    #[test]
    fn football_on_embedded_arc_is_form1() {
        let mut g = SingularGraph::new();
        let vm = g.add_vertex();
        let vp = g.add_vertex();
        let y = g.add_vertex();
        let z = g.add_vertex();
        let e = g.add_arc(4, vm, vp);
        g.add_arc(2, vm, y);
        g.add_arc(2, vm, y);
        g.add_arc(2, vp, z);
        g.add_arc(3, vp, z);
        let f = g.add_arc(2, y, z);
        assert_eq!(validate_graph(&g), vec![]);
        let w = FootballWitness { heavy: e, light: f, light_plus_side: Some(End::One) };
        let x = classify_football(&g, &w).unwrap();
        assert_eq!(x.form, Form::FbForm1);
        assert_eq!(sigs(&x), vec![vec![2, 2, 2], vec![2, 2, 3]]);

        let missing = FootballWitness { light_plus_side: None, ..w };
        assert!(matches!(
            classify_football(&g, &missing),
            Err(ClassifyError::WitnessInconsistent(_))
        ));
    }

    #[test]
    fn football_needs_heavier_heavy_edge() {
        let mut g = SingularGraph::new();
        let e = g.add_circle(2);
        let f = g.add_circle(3);
        let w = FootballWitness { heavy: e, light: f, light_plus_side: None };
        assert!(matches!(classify_football(&g, &w), Err(ClassifyError::WitnessInconsistent(_))));
    }

    #[test]
    fn invalid_graphs_are_rejected() {
        let mut g = SingularGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        let e = g.add_arc(3, a, b);
        g.add_arc(3, a, b);
        g.add_arc(3, a, b);
        assert!(matches!(
            classify_teardrop(&g, &TeardropWitness { edge: e }),
            Err(ClassifyError::InvalidGraph(_))
        ));
    }

    #[test]
    fn form_ids_round_trip_through_text() {
        for f in Form::ALL {
            assert_eq!(f.name().parse::<Form>().unwrap(), f);
        }
        assert!("TD_Form7".parse::<Form>().is_err());
    }
}
