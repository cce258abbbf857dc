//! Building bad orbifolds from a good seed by attaching random pieces.
//!
//! Randomness comes from ChaCha8 seeded with a 64-bit value
//! (`ChaCha8Rng::seed_from_u64`). Each attempt draws one index uniformly
//! from the list of candidate attachments `(form, parameters, sites)`,
//! counted in a fixed order: forms in declaration order, parameter tuples
//! ascending, then site combinations in site-list order. An attempt is
//! redrawn only when the witnesses can no longer all be cut in order (an
//! earlier witness edge was absorbed into the new one).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::Form;
use crate::decompose::{decompose, DecomposeError};
use crate::graph::SingularGraph;
use crate::ids::EdgeId;
use crate::signature::ConeSignature;
use crate::surgery::{attach_piece, AttachmentSite, PieceSpec, SurgeryError};
use crate::witness::BadnessWitness;

use super::params::enumerate_admissible_form_params;

const MAX_ATTEMPTS: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("no admissible attachment at step {step}")]
    NoAdmissibleAttachment { step: usize },
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerateOptions {
    /// Upper bound on every piece parameter.
    pub max_weight: u32,
    /// Whether pieces may be glued in at smooth points.
    pub allow_smooth: bool,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions { max_weight: 6, allow_smooth: true }
    }
}

/// All admissible pieces under a weight bound, grouped by the boundary
/// signatures they need.
#[derive(Clone, Debug)]
pub struct PieceCatalog {
    options: GenerateOptions,
    pieces: Vec<PieceSpec>,
    signatures: Vec<Vec<ConeSignature>>,
}

impl PieceCatalog {
    pub fn new(options: GenerateOptions) -> PieceCatalog {
        let mut pieces = Vec::new();
        for form in Form::ALL {
            for params in enumerate_admissible_form_params(form, options.max_weight) {
                if let Ok(p) = PieceSpec::new(form, &params) {
                    pieces.push(p);
                }
            }
        }
        let signatures = pieces.iter().map(|p| p.boundary_signatures()).collect();
        PieceCatalog { options, pieces, signatures }
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn options(&self) -> GenerateOptions {
        self.options
    }
}

/// Sites available for each boundary signature in the current graph.
fn site_lists(
    g: &SingularGraph,
    witnesses: &[BadnessWitness],
    allow_smooth: bool,
) -> BTreeMap<ConeSignature, Vec<AttachmentSite>> {
    let mut out: BTreeMap<ConeSignature, Vec<AttachmentSite>> = BTreeMap::new();
    if allow_smooth {
        out.entry(ConeSignature::smooth()).or_default().push(AttachmentSite::Smooth);
    }
    for v in g.vertices() {
        out.entry(g.vertex_signature(v)).or_default().push(AttachmentSite::Vertex(v));
    }
    let busy: Vec<EdgeId> = witnesses.iter().flat_map(|w| w.edges()).collect();
    for (id, e) in g.edges() {
        if !busy.contains(&id) {
            let sig = ConeSignature::from_weights([e.weight, e.weight]);
            out.entry(sig).or_default().push(AttachmentSite::EdgePoint(id));
        }
    }
    out
}

/// Site combinations for a piece with these boundary signatures: one site per component, no vertex used
/// twice.
fn combinations(
    signatures: &[ConeSignature],
    sites: &BTreeMap<ConeSignature, Vec<AttachmentSite>>,
) -> Vec<Vec<AttachmentSite>> {
    let mut combos = vec![Vec::new()];
    for sig in signatures {
        let Some(options) = sites.get(sig) else {
            return Vec::new();
        };
        combos = combos
            .into_iter()
            .flat_map(|prefix: Vec<AttachmentSite>| {
                options
                    .iter()
                    .filter(|s| !matches!(s, AttachmentSite::Vertex(_)) || !prefix.contains(s))
                    .map(|s| {
                        let mut c = prefix.clone();
                        c.push(*s);
                        c
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    combos
}

/// Teardrops first, and within each phase the most recent witness first.
pub fn order_witnesses(witnesses: &[BadnessWitness]) -> Vec<BadnessWitness> {
    let teardrops = witnesses.iter().rev().filter(|w| w.is_teardrop());
    let footballs = witnesses.iter().rev().filter(|w| !w.is_teardrop());
    teardrops.chain(footballs).copied().collect()
}

fn carry(w: BadnessWitness, renamed: &BTreeMap<EdgeId, (EdgeId, bool)>) -> BadnessWitness {
    let map = |e: EdgeId| renamed.get(&e).copied().unwrap_or((e, false));
    match w {
        BadnessWitness::Teardrop(t) => BadnessWitness::teardrop(map(t.edge).0),
        BadnessWitness::Football(f) => {
            let (heavy, hf) = map(f.heavy);
            let (light, lf) = map(f.light);
            let side = f.light_plus_side.map(|s| if hf ^ lf { s.opposite() } else { s });
            BadnessWitness::football(heavy, light, side)
        }
    }
}

pub fn random_bad_orbifold(
    seed: &SingularGraph,
    steps: usize,
    rng_seed: u64,
    options: GenerateOptions,
) -> Result<(SingularGraph, Vec<BadnessWitness>), GenerateError> {
    random_bad_orbifold_with(&PieceCatalog::new(options), seed, steps, rng_seed)
}

/// As [`random_bad_orbifold`], reusing a prepared catalog.
pub fn random_bad_orbifold_with(
    catalog: &PieceCatalog,
    seed: &SingularGraph,
    steps: usize,
    rng_seed: u64,
) -> Result<(SingularGraph, Vec<BadnessWitness>), GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut g = seed.clone();
    // Witnesses in attachment order.
    let mut witnesses: Vec<BadnessWitness> = Vec::new();
    for step in 0..steps {
        let sites = site_lists(&g, &witnesses, catalog.options.allow_smooth);
        let mut by_signature: BTreeMap<&[ConeSignature], Vec<Vec<AttachmentSite>>> = BTreeMap::new();
        for sig in &catalog.signatures {
            by_signature.entry(sig).or_insert_with(|| combinations(sig, &sites));
        }
        let per_piece: Vec<&Vec<Vec<AttachmentSite>>> =
            catalog.signatures.iter().map(|sig| &by_signature[sig.as_slice()]).collect();
        let total: usize = per_piece.iter().map(|c| c.len()).sum();
        if total == 0 {
            return Err(GenerateError::NoAdmissibleAttachment { step });
        }
        let mut accepted = None;
        for _ in 0..MAX_ATTEMPTS {
            let mut pick = rng.gen_range(0..total);
            let (piece, combo) = catalog
                .pieces
                .iter()
                .zip(per_piece.iter().copied())
                .find_map(|(p, combos)| {
                    if pick < combos.len() {
                        Some((p, &combos[pick]))
                    } else {
                        pick -= combos.len();
                        None
                    }
                })
                .expect("pick is below the total");
            let out = attach_piece(&g, piece, combo)?;
            let mut next: Vec<BadnessWitness> =
                witnesses.iter().map(|w| carry(*w, &out.renamed)).collect();
            next.push(out.witness);
            match decompose(&out.graph, &order_witnesses(&next)) {
                Ok(_) => {
                    accepted = Some((out.graph, next));
                    break;
                }
                Err(DecomposeError::StaleWitness { .. }) => {
                    log::debug!("step {step}: {} at {combo:?} rejected", piece.form());
                }
                Err(e) => return Err(e.into()),
            }
        }
        let (graph, next) = accepted.ok_or(GenerateError::NoAdmissibleAttachment { step })?;
        g = graph;
        witnesses = next;
    }
    Ok((g, order_witnesses(&witnesses)))
}
