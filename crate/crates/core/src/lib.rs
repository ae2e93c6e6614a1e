//! Exact analysis of cubic graphs: 3-edge-colourings, oddness, resistance,
//! cyclic connectivity, oddness-preserving reductions, and builders for the
//! standard snark gadgets and families assembled from them.

pub mod bounds;
pub mod canon;
pub mod catalogue;
pub mod circuits;
pub mod colouring;
pub mod connectivity;
pub mod constructions;
pub mod elimination;
pub mod error;
pub mod factors;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod par;
pub mod reductions;
pub mod structure;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{EdgeId, MultiGraph, Network, Vertex};
