//! Repeated cut-and-cap along an ordered list of declared witnesses.
//!
//! Teardrops come first, then footballs. Witnesses must not share edges;
//! an edge removed by an earlier step is an error, never re-derived. When a
//! step absorbs a surviving edge into another one (a splice cap), the
//! remaining witnesses are rewritten to the surviving id.
//!
//! Component counts in the trace are connected components of the graph.
//! Whether a two-sided `X` separates the ambient orbifold is not visible in
//! the graph.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::classify::{classify, ClassifyError, Form, Underlying, XDescription};
use crate::graph::{validate_graph, SingularGraph, Violation};
use crate::ids::EdgeId;
use crate::signature::ConeSignature;
use crate::surgery::{apply_cut_and_cap, CapRecord, CutOutcome, SurgeryError};
use crate::witness::BadnessWitness;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionStep {
    /// Zero-based position of the witness in the input list.
    pub index: usize,
    pub input: SingularGraph,
    /// The witness as applied, after earlier renames.
    pub witness: BadnessWitness,
    pub x: XDescription,
    pub caps: Vec<CapRecord>,
    pub output: SingularGraph,
    /// Witnesses still to be processed after this step.
    pub remaining: usize,
    pub graph_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandEntry {
    pub form: Form,
    pub underlying: Underlying,
    pub boundaries: Vec<ConeSignature>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTrace {
    pub steps: Vec<DecompositionStep>,
    pub ledger: Vec<SummandEntry>,
    pub final_graph: SingularGraph,
    /// Number of teardrop steps.
    pub n: usize,
    /// Number of football steps.
    pub m: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("input graph is invalid: {0:?}")]
    InvalidGraph(Vec<Violation>),
    #[error("witness {index} is a teardrop listed after a football")]
    PhaseOrderViolation { index: usize },
    #[error("witness {index} refers to edge {edge}, which is not available")]
    StaleWitness { index: usize, edge: EdgeId },
    #[error("witness {index}: {source}")]
    Classify { index: usize, source: ClassifyError },
    #[error("witness {index}: {source}")]
    Surgery { index: usize, source: SurgeryError },
}

fn check_preconditions(g: &SingularGraph, witnesses: &[BadnessWitness]) -> Result<(), DecomposeError> {
    let violations = validate_graph(g);
    if !violations.is_empty() {
        return Err(DecomposeError::InvalidGraph(violations));
    }
    let mut seen_football = false;
    for (index, w) in witnesses.iter().enumerate() {
        if w.is_teardrop() && seen_football {
            return Err(DecomposeError::PhaseOrderViolation { index });
        }
        seen_football |= !w.is_teardrop();
    }
    let mut owner: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (index, w) in witnesses.iter().enumerate() {
        for edge in w.edges() {
            if g.edge(edge).is_none() || owner.insert(edge, index).is_some() {
                return Err(DecomposeError::StaleWitness { index, edge });
            }
        }
    }
    Ok(())
}

/// Rewrites a pending witness through the renames of one cut. `Err` carries
/// the edge that did not survive.
pub fn carry_through(w: BadnessWitness, out: &CutOutcome) -> Result<BadnessWitness, EdgeId> {
    match w {
        BadnessWitness::Teardrop(t) => {
            let (edge, _) = out.resolve(t.edge).ok_or(t.edge)?;
            Ok(BadnessWitness::teardrop(edge))
        }
        BadnessWitness::Football(f) => {
            let (heavy, hf) = out.resolve(f.heavy).ok_or(f.heavy)?;
            let (light, lf) = out.resolve(f.light).ok_or(f.light)?;
            let side = f.light_plus_side.map(|s| if hf ^ lf { s.opposite() } else { s });
            Ok(BadnessWitness::football(heavy, light, side))
        }
    }
}

pub fn decompose(g: &SingularGraph, witnesses: &[BadnessWitness]) -> Result<DecompositionTrace, DecomposeError> {
    check_preconditions(g, witnesses)?;
    let total = witnesses.len();
    let mut pending: Vec<Result<BadnessWitness, EdgeId>> = witnesses.iter().copied().map(Ok).collect();
    let mut current = g.clone();
    let mut steps = Vec::with_capacity(total);
    let mut ledger = Vec::with_capacity(total);

    for index in 0..total {
        let witness = pending[index].map_err(|edge| DecomposeError::StaleWitness { index, edge })?;
        if let Some(edge) = witness.edges().into_iter().find(|e| current.edge(*e).is_none()) {
            return Err(DecomposeError::StaleWitness { index, edge });
        }
        let x = classify(&current, &witness).map_err(|source| DecomposeError::Classify { index, source })?;
        let out = apply_cut_and_cap(&current, &x).map_err(|source| DecomposeError::Surgery { index, source })?;
        for later in pending.iter_mut().skip(index + 1) {
            if let Ok(w) = *later {
                *later = carry_through(w, &out);
            }
        }
        log::debug!("step {index}: {witness} -> {}", x.summary());
        ledger.push(SummandEntry { form: x.form, underlying: x.underlying, boundaries: x.signatures() });
        steps.push(DecompositionStep {
            index,
            input: current,
            witness,
            x,
            caps: out.caps,
            graph_components: out.graph.component_count(),
            output: out.graph.clone(),
            remaining: total - index - 1,
        });
        current = out.graph;
    }
    let n = witnesses.iter().filter(|w| w.is_teardrop()).count();
    Ok(DecompositionTrace { steps, ledger, final_graph: current, n, m: total - n })
}
