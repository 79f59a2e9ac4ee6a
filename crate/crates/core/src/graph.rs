//! Simple undirected graphs whose edges carry non-empty sets of colors.
//!
//! Node and color labels are arbitrary whitespace-free UTF-8 tokens, interned
//! to dense ids in first-appearance order. Graphs are immutable after
//! construction and safe to share across threads.

use std::collections::HashMap;

use crate::density::Density;
use crate::error::{Error, Result};
use crate::multigraph::ColoredMultigraph;
use crate::requirement::{ColorRequirement, Feasibility, RequirementMode};
use crate::view::{normalize_subset, GraphView};

/// Options for [`parse_edge_list`].
#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Color assigned to lines of the form `<u> <v>` with no color field.
    /// When unset such lines are malformed.
    pub default_color: Option<String>,
}

/// An undirected simple graph with a non-empty color set per edge.
#[derive(Debug, Clone)]
pub struct EdgeColoredGraph {
    node_labels: Vec<String>,
    node_ids: HashMap<String, u32>,
    color_labels: Vec<String>,
    color_ids: HashMap<String, u32>,
    /// Endpoints per edge, `u < v` by internal id.
    ends: Vec<(u32, u32)>,
    color_off: Vec<u32>,
    color_flat: Vec<u32>,
    adj_off: Vec<u32>,
    adj: Vec<(u32, u32)>,
}

/// Incrementally collects labeled edges, merging duplicate node pairs by
/// color-set union, then validates and freezes the graph.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    node_labels: Vec<String>,
    node_ids: HashMap<String, u32>,
    color_labels: Vec<String>,
    color_ids: HashMap<String, u32>,
    edge_slots: HashMap<(u32, u32), usize>,
    edges: Vec<((u32, u32), Vec<u32>)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern_node(&mut self, label: &str) -> u32 {
        if let Some(&id) = self.node_ids.get(label) {
            return id;
        }
        let id = self.node_labels.len() as u32;
        self.node_labels.push(label.to_string());
        self.node_ids.insert(label.to_string(), id);
        id
    }

    fn intern_color(&mut self, label: &str) -> u32 {
        if let Some(&id) = self.color_ids.get(label) {
            return id;
        }
        let id = self.color_labels.len() as u32;
        self.color_labels.push(label.to_string());
        self.color_ids.insert(label.to_string(), id);
        id
    }

    /// Add one edge; repeated pairs merge their color sets.
    pub fn add_edge(&mut self, u: &str, v: &str, colors: &[&str]) -> Result<()> {
        self.add_edge_at_line(u, v, colors, 0)
    }

    fn add_edge_at_line(&mut self, u: &str, v: &str, colors: &[&str], line: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop {
                line,
                label: u.to_string(),
            });
        }
        if colors.is_empty() {
            return Err(Error::Parse {
                line,
                msg: "edge carries no colors".to_string(),
            });
        }
        let ui = self.intern_node(u);
        let vi = self.intern_node(v);
        let key = (ui.min(vi), ui.max(vi));
        let color_ids: Vec<u32> = colors.iter().map(|c| self.intern_color(c)).collect();
        match self.edge_slots.get(&key) {
            Some(&slot) => self.edges[slot].1.extend(color_ids),
            None => {
                self.edge_slots.insert(key, self.edges.len());
                self.edges.push((key, color_ids));
            }
        }
        Ok(())
    }

    pub fn build(self) -> Result<EdgeColoredGraph> {
        if self.edges.is_empty() && self.node_labels.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = self.node_labels.len();
        let mut ends = Vec::with_capacity(self.edges.len());
        let mut color_off = Vec::with_capacity(self.edges.len() + 1);
        let mut color_flat = Vec::new();
        color_off.push(0u32);
        for ((u, v), mut colors) in self.edges {
            colors.sort_unstable();
            colors.dedup();
            ends.push((u, v));
            color_flat.extend_from_slice(&colors);
            color_off.push(color_flat.len() as u32);
        }
        let (adj_off, adj) = build_adjacency(n, &ends);
        Ok(EdgeColoredGraph {
            node_labels: self.node_labels,
            node_ids: self.node_ids,
            color_labels: self.color_labels,
            color_ids: self.color_ids,
            ends,
            color_off,
            color_flat,
            adj_off,
            adj,
        })
    }
}

pub(crate) fn build_adjacency(n: usize, ends: &[(u32, u32)]) -> (Vec<u32>, Vec<(u32, u32)>) {
    let mut deg = vec![0u32; n];
    for &(u, v) in ends {
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    let mut off = vec![0u32; n + 1];
    for i in 0..n {
        off[i + 1] = off[i] + deg[i];
    }
    let mut cursor = off.clone();
    let mut adj = vec![(0u32, 0u32); ends.len() * 2];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[cursor[u as usize] as usize] = (v, e as u32);
        cursor[u as usize] += 1;
        adj[cursor[v as usize] as usize] = (u, e as u32);
        cursor[v as usize] += 1;
    }
    (off, adj)
}

/// Parse the canonical edge-list format.
///
/// One edge per line: `<u> <v> <c1>[,<c2>,...]`, fields separated by runs of
/// spaces or tabs, colors comma-separated without spaces. `#` starts a
/// comment line; blank lines are ignored. Duplicate node pairs merge by
/// color-set union.
pub fn parse_edge_list(text: &str, options: &ParseOptions) -> Result<EdgeColoredGraph> {
    let mut builder = GraphBuilder::new();
    let mut saw_edge = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (u, v, color_field) = match fields.as_slice() {
            [u, v, colors] => (*u, *v, Some(*colors)),
            [u, v] if options.default_color.is_some() => (*u, *v, None),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!(
                        "expected '<u> <v> <c1>[,<c2>,...]', found {} field(s)",
                        fields.len()
                    ),
                })
            }
        };
        let colors: Vec<&str> = match color_field {
            Some(f) => {
                let toks: Vec<&str> = f.split(',').collect();
                if toks.iter().any(|t| t.is_empty()) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "empty color token".to_string(),
                    });
                }
                toks
            }
            None => vec![options.default_color.as_deref().unwrap()],
        };
        builder.add_edge_at_line(u, v, &colors, line_no)?;
        saw_edge = true;
    }
    if !saw_edge {
        return Err(Error::EmptyInput);
    }
    builder.build()
}

impl EdgeColoredGraph {
    /// Parse with default options.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        parse_edge_list(text, &ParseOptions::default())
    }

    /// Build from `(u, v, colors)` triples; mostly a test convenience.
    pub fn from_edges(edges: &[(&str, &str, &[&str])]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for (u, v, colors) in edges {
            b.add_edge(u, v, colors)?;
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.node_labels.len()
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    /// Number of distinct colors seen at ingestion.
    pub fn colors(&self) -> usize {
        self.color_labels.len()
    }

    pub fn node_label(&self, v: u32) -> &str {
        &self.node_labels[v as usize]
    }

    pub fn node_id(&self, label: &str) -> Option<u32> {
        self.node_ids.get(label).copied()
    }

    pub fn color_label(&self, c: u32) -> &str {
        &self.color_labels[c as usize]
    }

    pub fn color_id(&self, label: &str) -> Option<u32> {
        self.color_ids.get(label).copied()
    }

    pub fn node_labels(&self) -> &[String] {
        &self.node_labels
    }

    pub fn color_labels(&self) -> &[String] {
        &self.color_labels
    }

    pub fn labels_of(&self, nodes: &[u32]) -> Vec<String> {
        nodes
            .iter()
            .map(|&v| self.node_labels[v as usize].clone())
            .collect()
    }

    pub fn edge_ends(&self, e: u32) -> (u32, u32) {
        self.ends[e as usize]
    }

    pub fn edge_color_ids(&self, e: u32) -> &[u32] {
        let lo = self.color_off[e as usize] as usize;
        let hi = self.color_off[e as usize + 1] as usize;
        &self.color_flat[lo..hi]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    /// Largest number of colors on any single edge.
    pub fn max_colors_per_edge(&self) -> usize {
        (0..self.m() as u32)
            .map(|e| self.edge_color_ids(e).len())
            .max()
            .unwrap_or(0)
    }

    /// The subgraph induced by `nodes`, with labels preserved and the color
    /// table carried over unchanged (color ids keep their meaning).
    pub fn induced_subgraph(&self, nodes: &[u32]) -> Result<EdgeColoredGraph> {
        let s = normalize_subset(nodes, self.n())?;
        let mut new_id = vec![u32::MAX; self.n()];
        let mut node_labels = Vec::with_capacity(s.len());
        let mut node_ids = HashMap::with_capacity(s.len());
        for (i, &v) in s.iter().enumerate() {
            new_id[v as usize] = i as u32;
            let label = self.node_labels[v as usize].clone();
            node_ids.insert(label.clone(), i as u32);
            node_labels.push(label);
        }
        let mut ends = Vec::new();
        let mut color_off = vec![0u32];
        let mut color_flat = Vec::new();
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let (nu, nv) = (new_id[u as usize], new_id[v as usize]);
            if nu != u32::MAX && nv != u32::MAX {
                ends.push((nu.min(nv), nu.max(nv)));
                color_flat.extend_from_slice(self.edge_color_ids(e as u32));
                color_off.push(color_flat.len() as u32);
            }
        }
        let (adj_off, adj) = build_adjacency(s.len(), &ends);
        Ok(EdgeColoredGraph {
            node_labels,
            node_ids,
            color_labels: self.color_labels.clone(),
            color_ids: self.color_ids.clone(),
            ends,
            color_off,
            color_flat,
            adj_off,
            adj,
        })
    }

    /// Exact density of the subgraph induced by `nodes`.
    pub fn density(&self, nodes: &[u32]) -> Density {
        let s = normalize_subset(nodes, self.n()).expect("node index out of range");
        let (edge_count, _) = self.induced_stats(&s);
        Density::new(edge_count, s.len())
    }

    /// Per-color induced edge counts; an edge with k colors contributes to k
    /// entries.
    pub fn color_counts(&self, nodes: &[u32]) -> Vec<u64> {
        let s = normalize_subset(nodes, self.n()).expect("node index out of range");
        self.induced_stats(&s).1
    }

    /// Whole-graph feasibility for a requirement.
    ///
    /// For `AtLeast` and `Exactly` the check is componentwise
    /// `count >= h`; for `AtMost` every instance is feasible because the
    /// empty subgraph qualifies. Slack entries are `count - h`.
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

    /// Expand every k-colored edge into k parallel single-colored edges.
    pub fn to_multigraph(&self) -> ColoredMultigraph {
        let mut ends = Vec::with_capacity(self.color_flat.len());
        let mut colors = Vec::with_capacity(self.color_flat.len());
        let mut group_off = Vec::with_capacity(self.m() + 1);
        group_off.push(0u32);
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            for &c in self.edge_color_ids(e as u32) {
                ends.push((u, v));
                colors.push(c);
            }
            group_off.push(ends.len() as u32);
        }
        ColoredMultigraph::from_parts(
            self.node_labels.clone(),
            self.color_labels.clone(),
            ends,
            colors,
            group_off,
        )
    }

    /// Emit the canonical edge-list text: original labels, color tokens
    /// sorted lexicographically, one edge per line in id order.
    pub fn serialize_edge_list(&self) -> String {
        let mut out = String::new();
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let mut tokens: Vec<&str> = self
                .edge_color_ids(e as u32)
                .iter()
                .map(|&c| self.color_labels[c as usize].as_str())
                .collect();
            tokens.sort_unstable();
            out.push_str(&format!(
                "{} {} {}\n",
                self.node_labels[u as usize],
                self.node_labels[v as usize],
                tokens.join(",")
            ));
        }
        out
    }
}

impl GraphView for EdgeColoredGraph {
    fn node_count(&self) -> usize {
        self.n()
    }

    fn color_count(&self) -> usize {
        self.colors()
    }

    fn total_edges(&self) -> u64 {
        self.m() as u64
    }

    fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        let lo = self.adj_off[v as usize] as usize;
        let hi = self.adj_off[v as usize + 1] as usize;
        &self.adj[lo..hi]
    }

    fn edge_colors(&self, key: u32) -> &[u32] {
        self.edge_color_ids(key)
    }

    fn for_each_edge(&self, f: &mut dyn FnMut(u32, u32, &[u32])) {
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            f(u, v, self.edge_color_ids(e as u32));
        }
    }

    fn collapsed_pairs(&self) -> Vec<(u32, u32, u64)> {
        self.ends.iter().map(|&(u, v)| (u, v, 1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_plus_pendant() -> EdgeColoredGraph {
        // Triangle a-b-c with colors {1},{1},{2}; disjoint edge d-e colored 3.
        EdgeColoredGraph::from_edges(&[
            ("a", "b", &["1"]),
            ("a", "c", &["1"]),
            ("b", "c", &["2"]),
            ("d", "e", &["3"]),
        ])
        .unwrap()
    }

    #[test]
    fn parses_basic_edge_list() {
        let g = EdgeColoredGraph::from_edge_list("a b 1\nb c 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.colors(), 2);
    }

    #[test]
    fn duplicate_pairs_merge_color_sets() {
        let g = EdgeColoredGraph::from_edge_list("a b 1\na b 2").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(g.edge_color_ids(0), &[0, 1]);
    }

    #[test]
    fn self_loop_is_rejected_with_line_number() {
        let err = EdgeColoredGraph::from_edge_list("a b 1\na a 1").unwrap_err();
        match err {
            Error::SelfLoop { line, label } => {
                assert_eq!(line, 2);
                assert_eq!(label, "a");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn empty_and_malformed_inputs() {
        assert!(matches!(
            EdgeColoredGraph::from_edge_list("# only a comment\n\n"),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            EdgeColoredGraph::from_edge_list("a b"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            EdgeColoredGraph::from_edge_list("a b 1 extra"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn comments_blanks_and_tabs_are_accepted() {
        let g = EdgeColoredGraph::from_edge_list("# header\n\na\tb\t1,2\n  b   c  2\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.colors(), 2);
        assert_eq!(g.edge_color_ids(0).len(), 2);
    }

    #[test]
    fn default_color_option() {
        let opts = ParseOptions {
            default_color: Some("base".to_string()),
        };
        let g = parse_edge_list("a b\nb c layer1", &opts).unwrap();
        assert_eq!(g.colors(), 2);
        assert_eq!(g.color_label(0), "base");
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = EdgeColoredGraph::from_edges(&[
            ("a", "b", &["1"]),
            ("b", "c", &["1"]),
            ("a", "c", &["1"]),
        ])
        .unwrap();
        let ab = g.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!((ab.n(), ab.m()), (2, 1));
        assert_eq!(ab.node_label(0), "a");

        let all = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!((all.n(), all.m()), (3, 3));

        let empty = g.induced_subgraph(&[]).unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));

        assert!(matches!(
            g.induced_subgraph(&[7]),
            Err(Error::NodeOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn density_examples() {
        let k4 = EdgeColoredGraph::from_edges(&[
            ("a", "b", &["1"]),
            ("a", "c", &["1"]),
            ("a", "d", &["1"]),
            ("b", "c", &["1"]),
            ("b", "d", &["1"]),
            ("c", "d", &["1"]),
        ])
        .unwrap();
        assert_eq!(k4.density(&[0, 1, 2, 3]), Density::new(6, 4));

        let path = EdgeColoredGraph::from_edge_list("a b 1\nb c 1").unwrap();
        assert_eq!(path.density(&[0, 1, 2]), Density::new(2, 3));
        assert_eq!(path.density(&[]), Density::ZERO);
    }

    #[test]
    fn color_count_examples() {
        let g = EdgeColoredGraph::from_edge_list("a b 1,3").unwrap();
        assert_eq!(g.color_counts(&[0, 1]), vec![1, 1]);
        assert_eq!(g.color_counts(&[]), vec![0, 0]);

        let tri = EdgeColoredGraph::from_edges(&[
            ("a", "b", &["1"]),
            ("a", "c", &["1"]),
            ("b", "c", &["2"]),
        ])
        .unwrap();
        assert_eq!(tri.color_counts(&[0, 1, 2]), vec![2, 1]);
    }

    #[test]
    fn feasibility_examples() {
        let tri = EdgeColoredGraph::from_edges(&[
            ("a", "b", &["1"]),
            ("a", "c", &["1"]),
            ("b", "c", &["2"]),
        ])
        .unwrap();
        let ok = tri
            .check_feasibility(&ColorRequirement::at_least(vec![2, 1]))
            .unwrap();
        assert!(ok.feasible);

        let missing = tri
            .check_feasibility(&ColorRequirement::at_least(vec![3, 1]))
            .unwrap();
        assert!(!missing.feasible);
        assert_eq!(missing.slack, vec![-1, 0]);

        let at_most = tri
            .check_feasibility(&ColorRequirement::at_most(vec![0, 0]))
            .unwrap();
        assert!(at_most.feasible);

        assert!(matches!(
            tri.check_feasibility(&ColorRequirement::at_least(vec![1])),
            Err(Error::RequirementLength { .. })
        ));
    }

    #[test]
    fn multigraph_transform_examples() {
        let g = EdgeColoredGraph::from_edge_list("u v 1,3").unwrap();
        let m = g.to_multigraph();
        assert_eq!(m.medge_count(), 2);
        assert_eq!(m.max_multiplicity(), 2);

        let single = EdgeColoredGraph::from_edge_list("a b 1\nb c 2").unwrap();
        let ms = single.to_multigraph();
        assert_eq!(ms.medge_count(), 2);
        assert_eq!(ms.max_multiplicity(), 1);

        let tri = EdgeColoredGraph::from_edges(&[
            ("a", "b", &["1", "2"]),
            ("a", "c", &["1", "2"]),
            ("b", "c", &["1", "2"]),
        ])
        .unwrap();
        let mt = tri.to_multigraph();
        assert_eq!(mt.density(&[0, 1, 2]), Density::new(6, 3));
        assert_eq!(tri.density(&[0, 1, 2]), Density::new(3, 3));
    }

    #[test]
    fn serialization_round_trips() {
        let g = triangle_plus_pendant();
        let text = g.serialize_edge_list();
        let back = EdgeColoredGraph::from_edge_list(&text).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.m(), g.m());
        assert_eq!(back.colors(), g.colors());
        for e in 0..g.m() as u32 {
            let (u, v) = g.edge_ends(e);
            let bu = back.node_id(g.node_label(u)).unwrap();
            let bv = back.node_id(g.node_label(v)).unwrap();
            let be = (0..back.m() as u32)
                .find(|&f| {
                    let (x, y) = back.edge_ends(f);
                    (x, y) == (bu.min(bv), bu.max(bv))
                })
                .expect("edge preserved");
            let mut a: Vec<&str> = g
                .edge_color_ids(e)
                .iter()
                .map(|&c| g.color_label(c))
                .collect();
            let mut b: Vec<&str> = back
                .edge_color_ids(be)
                .iter()
                .map(|&c| back.color_label(c))
                .collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }
}
