//! A common read-only view over simple edge-colored graphs and colored
//! multigraphs, so that peeling, flow, and enumeration code runs on both.

/// Read access shared by [`crate::graph::EdgeColoredGraph`] and
/// [`crate::multigraph::ColoredMultigraph`].
///
/// Edge keys index the underlying edge storage: simple edges for the former,
/// individual parallel edges for the latter. `total_edges` therefore counts
/// parallel edges separately on multigraphs, which is exactly the density
/// numerator each type uses.
pub trait GraphView {
    fn node_count(&self) -> usize;

    fn color_count(&self) -> usize;

    /// |E| for simple graphs, |E_M| for multigraphs.
    fn total_edges(&self) -> u64;

    /// Incident entries `(neighbor, edge key)`; parallel edges appear once each.
    fn neighbors(&self, v: u32) -> &[(u32, u32)];

    /// Colors carried by the edge behind `key` (always one for multigraphs).
    fn edge_colors(&self, key: u32) -> &[u32];

    /// Visit every edge once as `(u, v, colors)`; each visit contributes one
    /// unit to edge counts.
    fn for_each_edge(&self, f: &mut dyn FnMut(u32, u32, &[u32]));

    /// Node pairs with multiplicities, for flow constructions.
    fn collapsed_pairs(&self) -> Vec<(u32, u32, u64)>;

    /// Induced edge count and per-color counts for a node subset.
    fn induced_stats(&self, nodes: &[u32]) -> (u64, Vec<u64>) {
        let mut inside = vec![false; self.node_count()];
        for &v in nodes {
            assert!(
                (v as usize) < self.node_count(),
                "node index {v} out of range"
            );
            inside[v as usize] = true;
        }
        let mut edge_count = 0u64;
        let mut counts = vec![0u64; self.color_count()];
        self.for_each_edge(&mut |u, v, colors| {
            if inside[u as usize] && inside[v as usize] {
                edge_count += 1;
                for &c in colors {
                    counts[c as usize] += 1;
                }
            }
        });
        (edge_count, counts)
    }

    /// Per-color edge counts over the whole node set.
    fn total_color_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.color_count()];
        self.for_each_edge(&mut |_, _, colors| {
            for &c in colors {
                counts[c as usize] += 1;
            }
        });
        counts
    }
}

/// Sort, deduplicate, and range-check a caller-supplied node subset.
pub(crate) fn normalize_subset(nodes: &[u32], n: usize) -> crate::error::Result<Vec<u32>> {
    let mut s: Vec<u32> = nodes.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&last) = s.last() {
        if last as usize >= n {
            return Err(crate::error::Error::NodeOutOfRange { index: last, n });
        }
    }
    Ok(s)
}
