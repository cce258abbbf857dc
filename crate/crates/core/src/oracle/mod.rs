//! Independent brute-force machinery: signature and parameter enumeration,
//! small-graph enumeration, isomorphism, and a seeded generator of bad
//! orbifolds.

mod curated;
mod generate;
mod graphs;
mod iso;
mod params;
mod signatures;

pub use curated::{curated_round_trips, run_round_trip, RoundTripCase, RoundTripError, RoundTripReport};
pub use generate::{
    order_witnesses, random_bad_orbifold, random_bad_orbifold_with, GenerateError, GenerateOptions,
    PieceCatalog,
};
pub use graphs::{enumerate_small_graphs, EnumerationBounds};
pub use iso::{graphs_isomorphic, invariants};
pub use params::enumerate_admissible_form_params;
pub use signatures::enumerate_spherical_signatures;
