//! The `orbigraph/1` JSON document: a graph, its declared witnesses and an
//! optional decomposition trace.
//!
//! The writer is canonical. Vertices and edges come out sorted by id, fields
//! in a fixed order, two-space indentation and a trailing newline, so equal
//! documents serialize to equal bytes. Witness order is kept as given, since
//! it is the order of the decomposition.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decompose::DecompositionTrace;
use crate::graph::{validate_graph, Edge, EdgeShape, SingularGraph, Violation};
use crate::ids::{EdgeId, End, VertexId};
use crate::signature::Weight;
use crate::witness::BadnessWitness;

pub const FORMAT: &str = "orbigraph/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldDocument {
    pub graph: SingularGraph,
    pub witnesses: Vec<BadnessWitness>,
    pub trace: Option<TraceRecord>,
}

impl OrbifoldDocument {
    pub fn new(graph: SingularGraph, witnesses: Vec<BadnessWitness>) -> Self {
        OrbifoldDocument { graph, witnesses, trace: None }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("parse error at `{path}` (line {line}, column {column}): {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("unsupported format `{found}`, expected `{FORMAT}`")]
    Version { found: String },
    #[error("{kind} {id} is listed twice")]
    Duplicate { kind: &'static str, id: String },
    #[error("witness {index}: f_plus_side must be 0, 1 or null, found {found}")]
    BadSide { index: usize, found: u8 },
    #[error("graph is invalid: {}", list_violations(.0))]
    Validation(Vec<Violation>),
    #[error("witness {index} refers to missing edge {edge}")]
    UnknownWitnessEdge { index: usize, edge: EdgeId },
}

fn list_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeRecord {
    Circle,
    Arc([VertexId; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub weight: u32,
    pub shape: ShapeRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FootballRecord {
    pub e: EdgeId,
    pub f: EdgeId,
    #[serde(default)]
    pub f_plus_side: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessRecord {
    Teardrop(EdgeId),
    Football(FootballRecord),
}

impl From<&BadnessWitness> for WitnessRecord {
    fn from(w: &BadnessWitness) -> Self {
        match w {
            BadnessWitness::Teardrop(t) => WitnessRecord::Teardrop(t.edge),
            BadnessWitness::Football(f) => WitnessRecord::Football(FootballRecord {
                e: f.heavy,
                f: f.light,
                f_plus_side: f.light_plus_side.map(|s| s.index() as u8),
            }),
        }
    }
}

impl WitnessRecord {
    fn to_witness(&self, index: usize) -> Result<BadnessWitness, DocumentError> {
        match self {
            WitnessRecord::Teardrop(e) => Ok(BadnessWitness::teardrop(*e)),
            WitnessRecord::Football(r) => {
                let side = match r.f_plus_side {
                    None => None,
                    Some(s) => Some(End::from_index(s as usize).ok_or(DocumentError::BadSide { index, found: s })?),
                };
                Ok(BadnessWitness::football(r.e, r.f, side))
            }
        }
    }
}

/// A graph on its own, as stored inside a trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphRecord {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeRecord>,
}

impl From<&SingularGraph> for GraphRecord {
    fn from(g: &SingularGraph) -> Self {
        GraphRecord {
            vertices: g.vertices().collect(),
            edges: g
                .edges()
                .map(|(id, e)| EdgeRecord {
                    id,
                    weight: e.weight.get(),
                    shape: match e.shape {
                        EdgeShape::Circle => ShapeRecord::Circle,
                        EdgeShape::Arc(ends) => ShapeRecord::Arc(ends),
                    },
                })
                .collect(),
        }
    }
}

impl GraphRecord {
    /// Builds the graph without validating it. Repeated ids are an error.
    pub fn to_graph(&self) -> Result<SingularGraph, DocumentError> {
        let mut g = SingularGraph::new();
        for &v in &self.vertices {
            if !g.insert_vertex(v) {
                return Err(DocumentError::Duplicate { kind: "vertex", id: v.to_string() });
            }
        }
        for r in &self.edges {
            let weight = Weight::unchecked(r.weight);
            let edge = match r.shape {
                ShapeRecord::Circle => Edge::circle(weight),
                ShapeRecord::Arc([a, b]) => Edge::arc(weight, a, b),
            };
            if g.insert_edge(r.id, edge).is_some() {
                return Err(DocumentError::Duplicate { kind: "edge", id: r.id.to_string() });
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryRecord {
    pub signature: String,
    /// `e3.0` for the germ next to end 0 of `e3`, `e3~1` for the piece of a
    /// pierced `e3` running toward end 1.
    pub germs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapRecordJson {
    pub kind: String,
    pub signature: String,
    pub germs: Vec<String>,
    pub vertex: Option<VertexId>,
    pub edge: Option<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepRecord {
    pub index: usize,
    pub witness: WitnessRecord,
    pub form: String,
    pub underlying: String,
    pub interior_vertices: Vec<VertexId>,
    pub interior_edges: Vec<EdgeId>,
    pub boundary: Vec<BoundaryRecord>,
    pub caps: Vec<CapRecordJson>,
    pub output: GraphRecord,
    pub graph_components: usize,
    pub remaining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerRecord {
    pub form: String,
    pub underlying: String,
    pub boundary: Vec<String>,
}

/// Serialized form of a [`DecompositionTrace`]. Step 0 starts from the
/// document's graph; each later step starts from the previous output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceRecord {
    pub n: usize,
    pub m: usize,
    /// Always `"graph"`: component counts are connected components of the
    /// singular graph, not of the ambient orbifold.
    pub components: String,
    pub steps: Vec<StepRecord>,
    pub ledger: Vec<LedgerRecord>,
}

impl From<&DecompositionTrace> for TraceRecord {
    fn from(t: &DecompositionTrace) -> Self {
        let strings = |v: &[crate::signature::ConeSignature]| v.iter().map(|s| s.to_string()).collect();
        TraceRecord {
            n: t.n,
            m: t.m,
            components: "graph".to_string(),
            steps: t
                .steps
                .iter()
                .map(|s| StepRecord {
                    index: s.index,
                    witness: (&s.witness).into(),
                    form: s.x.form.to_string(),
                    underlying: s.x.underlying.to_string(),
                    interior_vertices: s.x.interior_vertices.iter().copied().collect(),
                    interior_edges: s.x.interior_edges.iter().copied().collect(),
                    boundary: s
                        .x
                        .boundary
                        .iter()
                        .map(|b| BoundaryRecord {
                            signature: b.signature().to_string(),
                            germs: b.germs.iter().map(|g| g.to_string()).collect(),
                        })
                        .collect(),
                    caps: s
                        .caps
                        .iter()
                        .map(|c| CapRecordJson {
                            kind: c.kind.to_string(),
                            signature: c.signature.to_string(),
                            germs: c.germs.iter().map(|g| g.to_string()).collect(),
                            vertex: c.vertex,
                            edge: c.edge,
                        })
                        .collect(),
                    output: (&s.output).into(),
                    graph_components: s.graph_components,
                    remaining: s.remaining,
                })
                .collect(),
            ledger: t
                .ledger
                .iter()
                .map(|l| LedgerRecord {
                    form: l.form.to_string(),
                    underlying: l.underlying.to_string(),
                    boundary: strings(&l.boundaries),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentRecord {
    format: String,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeRecord>,
    #[serde(default)]
    witnesses: Vec<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trace: Option<TraceRecord>,
}

#[derive(Deserialize)]
struct VersionProbe {
    format: Option<String>,
}

fn parse_error(path: String, e: &serde_json::Error) -> DocumentError {
    DocumentError::Parse { path, line: e.line(), column: e.column(), message: e.to_string() }
}

fn parse_record(text: &str) -> Result<DocumentRecord, DocumentError> {
    let probe: VersionProbe = serde_json::from_str(text).map_err(|e| parse_error(".".into(), &e))?;
    match probe.format {
        Some(f) if f == FORMAT => {}
        Some(found) => return Err(DocumentError::Version { found }),
        None => return Err(DocumentError::Version { found: String::new() }),
    }
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| parse_error(e.path().to_string(), e.inner()))
}

/// Parses a document without validating the graph or the witnesses.
pub fn parse_document_unchecked(text: &str) -> Result<OrbifoldDocument, DocumentError> {
    let record = parse_record(text)?;
    let graph = GraphRecord { vertices: record.vertices, edges: record.edges }.to_graph()?;
    let witnesses = record
        .witnesses
        .iter()
        .enumerate()
        .map(|(i, w)| w.to_witness(i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrbifoldDocument { graph, witnesses, trace: record.trace })
}

/// Parses a document, validates its graph and checks that every witness
/// edge exists.
pub fn parse_document(text: &str) -> Result<OrbifoldDocument, DocumentError> {
    let doc = parse_document_unchecked(text)?;
    let violations = validate_graph(&doc.graph);
    if !violations.is_empty() {
        return Err(DocumentError::Validation(violations));
    }
    for (index, w) in doc.witnesses.iter().enumerate() {
        if let Some(edge) = w.edges().into_iter().find(|e| doc.graph.edge(*e).is_none()) {
            return Err(DocumentError::UnknownWitnessEdge { index, edge });
        }
    }
    Ok(doc)
}

pub fn write_document(doc: &OrbifoldDocument) -> String {
    let graph = GraphRecord::from(&doc.graph);
    let record = DocumentRecord {
        format: FORMAT.to_string(),
        vertices: graph.vertices,
        edges: graph.edges,
        witnesses: doc.witnesses.iter().map(WitnessRecord::from).collect(),
        trace: doc.trace.clone(),
    };
    let mut out = serde_json::to_string_pretty(&record).expect("document records always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CIRCLE_TEARDROP: &str = r#"{
  "format": "orbigraph/1",
  "vertices": [],
  "edges": [{"id": "e0", "weight": 4, "shape": "circle"}],
  "witnesses": [{"teardrop": "e0"}]
}"#;

    #[test]
    fn minimal_document_parses() {
        let doc = parse_document(CIRCLE_TEARDROP).unwrap();
        assert_eq!(doc.graph.edge_count(), 1);
        assert_eq!(doc.graph.vertex_count(), 0);
        assert_eq!(doc.witnesses, vec![BadnessWitness::teardrop(EdgeId(0))]);
    }

    #[test]
    fn writer_is_canonical() {
        let doc = parse_document(CIRCLE_TEARDROP).unwrap();
        let text = write_document(&doc);
        assert!(text.ends_with("}\n"));
        assert_eq!(parse_document(&text).unwrap(), doc);
        assert_eq!(write_document(&parse_document(&text).unwrap()), text);
    }

    #[test]
    fn toroidal_vertex_fails_validation() {
        let text = r#"{"format": "orbigraph/1", "vertices": ["v0", "v1"], "edges": [
            {"id": "e0", "weight": 3, "shape": {"arc": ["v0", "v1"]}},
            {"id": "e1", "weight": 3, "shape": {"arc": ["v0", "v1"]}},
            {"id": "e2", "weight": 3, "shape": {"arc": ["v0", "v1"]}}], "witnesses": []}"#;
        let Err(DocumentError::Validation(vs)) = parse_document(text) else { panic!() };
        assert!(matches!(vs[0], Violation::InadmissibleVertex { .. }));
    }

    #[test]
    fn wrong_version_is_reported() {
        let text = CIRCLE_TEARDROP.replace("orbigraph/1", "orbigraph/2");
        assert_eq!(parse_document(&text), Err(DocumentError::Version { found: "orbigraph/2".into() }));
    }

    #[test]
    fn parse_errors_carry_a_path_and_line() {
        let text = CIRCLE_TEARDROP.replace("\"weight\": 4", "\"weight\": \"four\"");
        let Err(DocumentError::Parse { path, line, .. }) = parse_document(&text) else { panic!() };
        assert_eq!(path, "edges[0].weight");
        assert_eq!(line, 4);
    }

    #[test]
    fn missing_witness_edge_is_reported() {
        let text = CIRCLE_TEARDROP.replace("{\"teardrop\": \"e0\"}", "{\"teardrop\": \"e9\"}");
        assert_eq!(parse_document(&text), Err(DocumentError::UnknownWitnessEdge { index: 0, edge: EdgeId(9) }));
    }

    #[test]
    fn football_side_round_trips() {
        let mut g = SingularGraph::new();
        let c = g.add_circle(3);
        let d = g.add_circle(2);
        for side in [None, Some(End::Zero), Some(End::One)] {
            let doc = OrbifoldDocument::new(g.clone(), vec![BadnessWitness::football(c, d, side)]);
            assert_eq!(parse_document(&write_document(&doc)).unwrap(), doc);
        }
        let text = write_document(&OrbifoldDocument::new(g, vec![BadnessWitness::football(c, d, None)]));
        assert!(text.contains("\"f_plus_side\": null"));
        let bad = text.replace("\"f_plus_side\": null", "\"f_plus_side\": 2");
        assert_eq!(parse_document(&bad), Err(DocumentError::BadSide { index: 0, found: 2 }));
    }
}
