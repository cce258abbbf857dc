//! Cut-and-cap surgery and its reverse, piece attachment.

mod attach;
mod cut;
mod piece;
mod workspace;

use thiserror::Error;

use crate::graph::Violation;
use crate::ids::{EdgeId, HalfEdge};
use crate::signature::{ConeSignature, Weight};

pub use attach::{attach_piece, AttachOutcome, AttachmentSite};
pub use cut::{apply_cut_and_cap, CapKind, CapRecord, CutOutcome};
pub use piece::{
    validate_form_params, PieceError, PieceSpec, PieceTemplate, TemplateEdge, TemplateEnd,
    TemplateMark,
};

use workspace::WorkspaceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("description of X does not fit the graph: {0}")]
    InconsistentX(String),
    #[error("germ refers to edge {0}, which is not available")]
    DeadEdgeGerm(EdgeId),
    #[error("cannot splice germs of weights {0} and {1}")]
    SpliceWeightMismatch(Weight, Weight),
    #[error("cone on {0} is not spherical")]
    ConeNotSpherical(ConeSignature),
    #[error("site for boundary component {component} does not fit: {detail}")]
    SiteMismatch { component: usize, detail: String },
    #[error("invalid piece: {0}")]
    InvalidPiece(#[from] PieceError),
    #[error("surgery produced an invalid graph: {0:?}")]
    InvalidResult(Vec<Violation>),
}

impl From<WorkspaceError> for SurgeryError {
    fn from(e: WorkspaceError) -> Self {
        match e {
            WorkspaceError::MissingEdge(edge) => SurgeryError::DeadEdgeGerm(edge),
            WorkspaceError::NotAttached(h) => SurgeryError::InconsistentX(not_attached(h)),
            WorkspaceError::SpliceWeights(a, b) => SurgeryError::SpliceWeightMismatch(a, b),
            WorkspaceError::SpliceSelf => SurgeryError::InconsistentX("stub spliced to itself".into()),
            WorkspaceError::ConeNotSpherical(sig) => SurgeryError::ConeNotSpherical(sig),
            WorkspaceError::LooseStubs(n) => {
                SurgeryError::InconsistentX(format!("{n} severed germs left uncapped"))
            }
        }
    }
}

fn not_attached(h: HalfEdge) -> String {
    format!("half-edge {h} is not attached to a vertex")
}
