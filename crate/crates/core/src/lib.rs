//! Exact graph invariants, clique-minor search, induced-pattern detection
//! and the C5-inflation clique cover for W5-free graphs with independence
//! number two.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bit-row adjacency and set predicates.
//! * [`invariants`]: independence, clique and chromatic numbers, matchings.
//! * [`detect`]: induced C5 / W5 / co-star detection and dominating edges.
//! * [`minors`]: exact `K_t`-minor search with branch-set witnesses.
//! * [`inflation`]: maximal inflations of C5.
//! * [`decomposition`]: the Y/Z classification, its structural claims, the
//!   four-clique cover and the end-to-end certificate pipeline.
//! * [`ingest`]: graph6, isomorph-free enumeration and random generation.

pub mod decomposition;
pub mod detect;
pub mod error;
pub mod families;
pub mod graph;
pub mod inflation;
pub mod ingest;
pub mod invariants;
pub mod minors;

#[cfg(test)]
mod testutil;

pub use error::GraphError;
pub use graph::{Graph, GraphBuilder, VertexSet};
