//! Exact edge-isoperimetric profiles of small graphs.
//!
//! For a graph `G` and each subset size `i`, the six profiles record the
//! extremes of three edge counters over all `i`-vertex subsets:
//!
//! | profile | counter | sense |
//! |---|---|---|
//! | Δ | induced edges | max |
//! | Σ | induced edges | min |
//! | T | covered edges | max |
//! | Υ | covered edges | min |
//! | Θ | cut edges | max |
//! | Φ | cut edges | min |
//!
//! The [`analysis`] module turns profiles into difference sequences, tests
//! them for symmetry and checks the regular-graph characterisation together
//! with the identities relating the six profiles.

pub mod analysis;
pub mod graph;
pub mod metrics;
pub mod solver;

pub use graph::{DegreeSummary, Graph, GraphError, VertexSet};
pub use metrics::SubsetMetrics;
pub use solver::{MetricKind, Profile, SixProfiles, SolverConfig, SolverError, Strategy};
