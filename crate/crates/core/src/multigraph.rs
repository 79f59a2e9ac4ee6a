//! Colored multigraphs: parallel edges, one color each.
//!
//! Produced by [`crate::graph::EdgeColoredGraph::to_multigraph`]; parallel
//! edges between a pair are grouped so they can be added or removed together.

use crate::density::Density;
use crate::error::Result;
use crate::graph::build_adjacency;
use crate::requirement::{ColorRequirement, Feasibility, RequirementMode};
use crate::view::{normalize_subset, GraphView};

#[derive(Debug, Clone)]
pub struct ColoredMultigraph {
    node_labels: Vec<String>,
    color_labels: Vec<String>,
    /// Endpoints per parallel edge.
    ends: Vec<(u32, u32)>,
    /// Single color per parallel edge.
    colors: Vec<u32>,
    /// Parallel edges of one node pair form the group
    /// `ends[group_off[g]..group_off[g+1]]`.
    group_off: Vec<u32>,
    medge_group: Vec<u32>,
    max_multiplicity: u32,
    adj_off: Vec<u32>,
    adj: Vec<(u32, u32)>,
}

impl ColoredMultigraph {
    pub(crate) fn from_parts(
        node_labels: Vec<String>,
        color_labels: Vec<String>,
        ends: Vec<(u32, u32)>,
        colors: Vec<u32>,
        group_off: Vec<u32>,
    ) -> Self {
        let n = node_labels.len();
        let (adj_off, adj) = build_adjacency(n, &ends);
        let mut medge_group = vec![0u32; ends.len()];
        let mut max_multiplicity = 0u32;
        for g in 0..group_off.len().saturating_sub(1) {
            let (lo, hi) = (group_off[g], group_off[g + 1]);
            max_multiplicity = max_multiplicity.max(hi - lo);
            for e in lo..hi {
                medge_group[e as usize] = g as u32;
            }
        }
        ColoredMultigraph {
            node_labels,
            color_labels,
            ends,
            colors,
            group_off,
            medge_group,
            max_multiplicity,
            adj_off,
            adj,
        }
    }

    pub fn n(&self) -> usize {
        self.node_labels.len()
    }

    /// Number of parallel edges, |E_M|.
    pub fn medge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn colors(&self) -> usize {
        self.color_labels.len()
    }

    pub fn node_label(&self, v: u32) -> &str {
        &self.node_labels[v as usize]
    }

    pub fn color_label(&self, c: u32) -> &str {
        &self.color_labels[c as usize]
    }

    pub fn labels_of(&self, nodes: &[u32]) -> Vec<String> {
        nodes
            .iter()
            .map(|&v| self.node_labels[v as usize].clone())
            .collect()
    }

    pub fn medge_ends(&self, e: u32) -> (u32, u32) {
        self.ends[e as usize]
    }

    pub fn medge_color(&self, e: u32) -> u32 {
        self.colors[e as usize]
    }

    /// Ids of all parallel edges sharing the pair of edge `e`.
    pub fn parallel_group(&self, e: u32) -> std::ops::Range<u32> {
        let g = self.medge_group[e as usize] as usize;
        self.group_off[g]..self.group_off[g + 1]
    }

    /// Largest number of parallel edges between any node pair.
    pub fn max_multiplicity(&self) -> u32 {
        self.max_multiplicity
    }

    /// Degree counting parallel edges separately.
    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    /// Exact multigraph density |E_M(S)| / |S|.
    pub fn density(&self, nodes: &[u32]) -> Density {
        let s = normalize_subset(nodes, self.n()).expect("node index out of range");
        let (edge_count, _) = self.induced_stats(&s);
        Density::new(edge_count, s.len())
    }

    /// Per-color counts of induced parallel edges.
    pub fn color_counts(&self, nodes: &[u32]) -> Vec<u64> {
        let s = normalize_subset(nodes, self.n()).expect("node index out of range");
        self.induced_stats(&s).1
    }

    pub fn check_feasibility(&self, req: &ColorRequirement) -> Result<Feasibility> {
        req.validate_len(self.colors())?;
        let counts = self.total_color_counts();
        let slack: Vec<i64> = counts
            .iter()
            .zip(&req.h)
            .map(|(&c, &h)| c as i64 - h as i64)
            .collect();
        let feasible = match req.mode {
            RequirementMode::AtLeast | RequirementMode::Exactly => slack.iter().all(|&s| s >= 0),
            RequirementMode::AtMost => true,
        };
        Ok(Feasibility { feasible, slack })
    }
}

impl GraphView for ColoredMultigraph {
    fn node_count(&self) -> usize {
        self.n()
    }

    fn color_count(&self) -> usize {
        self.colors()
    }

    fn total_edges(&self) -> u64 {
        self.medge_count() as u64
    }

    fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        let lo = self.adj_off[v as usize] as usize;
        let hi = self.adj_off[v as usize + 1] as usize;
        &self.adj[lo..hi]
    }

    fn edge_colors(&self, key: u32) -> &[u32] {
        std::slice::from_ref(&self.colors[key as usize])
    }

    fn for_each_edge(&self, f: &mut dyn FnMut(u32, u32, &[u32])) {
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            f(u, v, std::slice::from_ref(&self.colors[e]));
        }
    }

    fn collapsed_pairs(&self) -> Vec<(u32, u32, u64)> {
        let mut pairs = Vec::with_capacity(self.group_off.len().saturating_sub(1));
        for g in 0..self.group_off.len().saturating_sub(1) {
            let (lo, hi) = (self.group_off[g] as usize, self.group_off[g + 1] as usize);
            if hi > lo {
                let (u, v) = self.ends[lo];
                pairs.push((u, v, (hi - lo) as u64));
            }
        }
        pairs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColoredGraph;

    #[test]
    fn parallel_edges_are_grouped_with_distinct_colors() {
        let g = EdgeColoredGraph::from_edge_list("a b 1,2,3\nb c 2").unwrap();
        let m = g.to_multigraph();
        assert_eq!(m.medge_count(), 4);
        assert_eq!(m.max_multiplicity(), 3);
        assert_eq!(m.parallel_group(1), 0..3);
        let mut group_colors: Vec<u32> = (0..3).map(|e| m.medge_color(e)).collect();
        group_colors.sort_unstable();
        group_colors.dedup();
        assert_eq!(group_colors.len(), 3);
        assert_eq!(m.degree(1), 4);
    }

    #[test]
    fn multigraph_counts_count_parallel_edges() {
        let g = EdgeColoredGraph::from_edge_list("u v 1,2").unwrap();
        let m = g.to_multigraph();
        assert_eq!(m.density(&[0, 1]), Density::new(2, 2));
        assert_eq!(m.color_counts(&[0, 1]), vec![1, 1]);
    }

    #[test]
    fn induced_never_loses_edges_relative_to_simple() {
        let g = EdgeColoredGraph::from_edge_list("a b 1,2\nb c 1\na c 3\nc d 2").unwrap();
        let m = g.to_multigraph();
        for subset in [vec![], vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3]] {
            let dm = m.density(&subset);
            let dg = g.density(&subset);
            assert!(dm.edges >= dg.edges);
        }
    }
}
