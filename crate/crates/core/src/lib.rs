//! Circular connectivity of bidirected graphs.
//!
//! * [`graph`]: bidirected multigraphs and the digraph encoding.
//! * [`walk`]: walks and their classification as trails, ditrails, dipaths.
//! * [`reach`]: `(α, β)`-ditrail reachability.
//! * [`circular`]: circular edges and circular components.
//! * [`kl`]: the Kotzig-Lovász decomposition `~α` of a bidirected graph.
//! * [`factor`]: b-factors, b-flexible components and `~±b`.

pub mod circular;
pub mod edgeset;
pub mod error;
pub mod factor;
pub mod graph;
pub mod kl;
pub mod partition;
pub mod reach;
pub mod walk;

pub use circular::{circular_components, circular_edges, circularly_connected, is_circular, CircularStructure};
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use factor::{
    b_factor_components, b_flexible_components, b_kl_by_reduction, b_kl_decomposition, b_same_class, build_gm,
    classify_edges, enumerate_b_factors, find_b_factor, is_b_factor, restrict_b, DegreeSpec, EdgeStatus, KlMethod,
};
pub use graph::{BidirectedGraph, Edge, EdgeId, EdgeSpec, EndSigns, Sign, Subgraph, VertexId};
pub use kl::{component_restriction, kl_decomposition, same_class, KlPartition};
pub use partition::Partition;
pub use reach::{ditrail_exists, diwalk_exists, enumerate_ditrails, find_ditrail, reach_profile, ReachProfile};
pub use walk::{classify_walk, DitrailType, Step, Walk, WalkClass};
