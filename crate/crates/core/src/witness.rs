//! Declared embedded bad 2-suborbifolds. These are inputs: nothing in this
//! crate searches an ambient orbifold for them.

use std::fmt;

use crate::graph::SingularGraph;
use crate::ids::{EdgeId, End};

/// A teardrop `S2(a)` meeting the singular set once, on `edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TeardropWitness {
    pub edge: EdgeId,
}

/// A bad football `S2(a,b)`, `b > a`, meeting the heavy edge (weight `b`)
/// and the light edge (weight `a`) once each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FootballWitness {
    pub heavy: EdgeId,
    pub light: EdgeId,
    /// Which end of the light edge lies on the same side of the football as
    /// end 1 of the heavy edge. Embedding data the graph does not carry.
    pub light_plus_side: Option<End>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BadnessWitness {
    Teardrop(TeardropWitness),
    Football(FootballWitness),
}

impl BadnessWitness {
    pub fn teardrop(edge: EdgeId) -> Self {
        BadnessWitness::Teardrop(TeardropWitness { edge })
    }

    pub fn football(heavy: EdgeId, light: EdgeId, light_plus_side: Option<End>) -> Self {
        BadnessWitness::Football(FootballWitness { heavy, light, light_plus_side })
    }

    pub fn is_teardrop(&self) -> bool {
        matches!(self, BadnessWitness::Teardrop(_))
    }

    /// Edges the witness meets.
    pub fn edges(&self) -> Vec<EdgeId> {
        match self {
            BadnessWitness::Teardrop(t) => vec![t.edge],
            BadnessWitness::Football(f) => vec![f.heavy, f.light],
        }
    }

    pub fn edges_exist_in(&self, g: &SingularGraph) -> bool {
        self.edges().iter().all(|e| g.edge(*e).is_some())
    }
}

impl fmt::Display for BadnessWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BadnessWitness::Teardrop(t) => write!(f, "teardrop({})", t.edge),
            BadnessWitness::Football(w) => match w.light_plus_side {
                Some(side) => write!(f, "football({}, {}, +{})", w.heavy, w.light, side),
                None => write!(f, "football({}, {})", w.heavy, w.light),
            },
        }
    }
}
