//! Solver output: a node subset with its induced statistics.

use serde::Serialize;

use crate::density::Density;
use crate::requirement::ColorRequirement;
use crate::view::GraphView;

/// A node subset together with induced edge count, exact density, and
/// per-color edge counts, all recomputed from the source graph.
///
/// For multigraph solvers `edge_count` counts parallel edges and `density`
/// is the multigraph density; `simple_density` then carries the plain
/// |E(S)|/|S| value of the same node set for comparisons.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubgraphResult {
    /// Internal node ids, sorted ascending.
    pub nodes: Vec<u32>,
    pub edge_count: u64,
    pub density: Density,
    pub color_counts: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple_density: Option<Density>,
}

impl SubgraphResult {
    /// Recount stats for `nodes` on `g`. The slice must be sorted and
    /// deduplicated.
    pub fn from_nodes<G: GraphView>(g: &G, nodes: Vec<u32>) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let (edge_count, color_counts) = g.induced_stats(&nodes);
        let density = Density::new(edge_count, nodes.len());
        SubgraphResult {
            nodes,
            edge_count,
            density,
            color_counts,
            simple_density: None,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Componentwise requirement check against the recorded counts.
    pub fn satisfies(&self, req: &ColorRequirement) -> bool {
        self.color_counts.len() == req.h.len() && req.satisfied_by(&self.color_counts)
    }
}
