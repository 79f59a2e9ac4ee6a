//! Densest subgraphs under edge-color constraints.
//!
//! The library models undirected graphs whose edges carry sets of
//! categorical attributes ("colors") and searches for node subsets that
//! maximize the induced edge-to-node ratio while meeting per-color edge
//! requirements:
//!
//! - [`peel`]: linear-time min-degree peeling, the classical greedy densest
//!   subgraph approximation, and the at-least-h-edges variant.
//! - [`solve`]: the constrained approximations (single-color and
//!   multigraph routes) plus the halting-peel heuristic baseline.
//! - [`exact`]: max-flow exact solver, brute-force oracles, and LP model
//!   export.
//!
//! Densities are exact integer pairs throughout; nothing is compared in
//! floating point.

pub mod density;
pub mod error;
pub mod exact;
pub mod graph;
pub mod multigraph;
pub mod peel;
pub mod requirement;
pub mod solve;
pub mod subgraph;
pub mod view;

pub use density::Density;
pub use error::{Error, Result};
pub use graph::{parse_edge_list, EdgeColoredGraph, GraphBuilder, ParseOptions};
pub use multigraph::ColoredMultigraph;
pub use peel::{
    at_least_h_edges_peel, at_least_h_edges_peel_tracked, at_least_h_edges_peel_with_trace,
    degeneracy_peel, greedy_peel_unconstrained, lower_bound_nodes, PeelingTrace, TrackedPeel,
};
pub use requirement::{ColorRequirement, Feasibility, RequirementMode};
pub use solve::{col_approx, col_approx_multi, col_approx_with, heuristic_peel, PatchStrategy};
pub use subgraph::SubgraphResult;
pub use view::GraphView;
