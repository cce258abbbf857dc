//! Singular sets of closed orientable 3-orbifolds as weighted trivalent
//! graphs, the local pictures around declared teardrops and bad footballs,
//! and the cut-and-cap surgery that removes them.
//!
//! The existence, isotopy class and maximality of the embedded bad
//! 2-suborbifolds are inputs here, supplied as [`witness::BadnessWitness`]
//! values. Nothing in this crate searches for them.

pub mod classify;
pub mod cli;
pub mod decompose;
pub mod dot;
pub mod explore;
pub mod graph;
pub mod ids;
pub mod io;
pub mod oracle;
pub mod signature;
pub mod surgery;
pub mod witness;

pub use classify::{classify, ClassifyError, Form, Underlying, XDescription};
pub use decompose::{decompose, DecomposeError, DecompositionTrace};
pub use graph::{validate_graph, Edge, EdgeShape, SingularGraph, Violation};
pub use ids::{EdgeId, End, HalfEdge, VertexId};
pub use io::{parse_document, write_document, DocumentError, OrbifoldDocument};
pub use signature::{ConeSignature, TwoOrbifoldClass, Weight};
pub use witness::{BadnessWitness, FootballWitness, TeardropWitness};
