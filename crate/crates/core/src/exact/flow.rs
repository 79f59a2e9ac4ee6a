//! Exact unconstrained densest subgraph via min-cut.
//!
//! For a density guess g, the cut network has source arcs of capacity m to
//! every node, sink arcs of capacity m + 2g - deg(v), and a unit arc in each
//! direction per edge (weighted by multiplicity on multigraphs). A node
//! subset S cuts to n*m + 2(g|S| - |E(S)|), so the minimum cut dips below
//! n*m exactly when some subset is denser than g. Binary search narrows the
//! guess until the interval is too small to contain two achievable
//! densities; all capacities are scaled integers.

use crate::error::{Error, Result};
use crate::subgraph::SubgraphResult;
use crate::view::GraphView;

/// Cut network for one density guess; capacities share `denominator`.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    pub node_count: usize,
    pub source: u32,
    pub sink: u32,
    pub denominator: u128,
    pub arcs: Vec<FlowArc>,
}

/// One directed arc with capacity `num / denominator`.
#[derive(Debug, Clone, Copy)]
pub struct FlowArc {
    pub from: u32,
    pub to: u32,
    pub num: i128,
}

/// Build the cut network for guess `g = g_num / g_den` over weighted node
/// pairs. Deterministic in the input order.
pub fn build_flow_network(
    pairs: &[(u32, u32, u64)],
    n: usize,
    total_weight: u64,
    g_num: u128,
    g_den: u128,
) -> FlowNetwork {
    let source = n as u32;
    let sink = n as u32 + 1;
    let den = g_den as i128;
    let m = total_weight as i128;

    let mut deg = vec![0i128; n];
    for &(u, v, w) in pairs {
        deg[u as usize] += w as i128;
        deg[v as usize] += w as i128;
    }

    let mut arcs = Vec::with_capacity(2 * n + 2 * pairs.len());
    for v in 0..n {
        arcs.push(FlowArc {
            from: source,
            to: v as u32,
            num: m * den,
        });
        let cap = m * den + 2 * g_num as i128 - den * deg[v];
        debug_assert!(cap >= 0);
        arcs.push(FlowArc {
            from: v as u32,
            to: sink,
            num: cap,
        });
    }
    for &(u, v, w) in pairs {
        arcs.push(FlowArc {
            from: u,
            to: v,
            num: w as i128 * den,
        });
        arcs.push(FlowArc {
            from: v,
            to: u,
            num: w as i128 * den,
        });
    }
    FlowNetwork {
        node_count: n + 2,
        source,
        sink,
        denominator: g_den,
        arcs,
    }
}

struct Dinic {
    to: Vec<u32>,
    cap: Vec<i128>,
    adj: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize, arcs: &[FlowArc]) -> Self {
        let mut d = Dinic {
            to: Vec::with_capacity(arcs.len() * 2),
            cap: Vec::with_capacity(arcs.len() * 2),
            adj: vec![Vec::new(); n],
            level: vec![-1; n],
            iter: vec![0; n],
        };
        for a in arcs {
            let idx = d.to.len() as u32;
            d.adj[a.from as usize].push(idx);
            d.to.push(a.to);
            d.cap.push(a.num);
            d.adj[a.to as usize].push(idx + 1);
            d.to.push(a.from);
            d.cap.push(0);
        }
        d
    }

    fn bfs(&mut self, s: u32, t: u32) -> bool {
        self.level.fill(-1);
        self.level[s as usize] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v as usize] {
                let w = self.to[e as usize];
                if self.cap[e as usize] > 0 && self.level[w as usize] < 0 {
                    self.level[w as usize] = self.level[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t as usize] >= 0
    }

    fn dfs(&mut self, v: u32, t: u32, limit: i128) -> i128 {
        if v == t {
            return limit;
        }
        while self.iter[v as usize] < self.adj[v as usize].len() {
            let e = self.adj[v as usize][self.iter[v as usize]] as usize;
            let w = self.to[e];
            if self.cap[e] > 0 && self.level[w as usize] == self.level[v as usize] + 1 {
                let pushed = self.dfs(w, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[v as usize] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: u32, t: u32) -> i128 {
        let mut flow = 0i128;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let pushed = self.dfs(s, t, i128::MAX);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }

    /// Residual-reachable set from `s` after max flow: the source side of a
    /// minimum cut.
    fn min_cut_side(&self, s: u32) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s as usize] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v as usize] {
                let w = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w as u32);
                }
            }
        }
        seen
    }
}

/// Iteration accounting of the density binary search.
#[derive(Debug, Clone, Copy)]
pub struct FlowSearchStats {
    pub iterations: u32,
    pub iteration_bound: u32,
}

/// Exact maximum-density subgraph. Works on simple graphs and multigraphs;
/// on the latter the density counts parallel edges.
pub fn exact_dsp_flow<G: GraphView>(g: &G) -> Result<SubgraphResult> {
    Ok(exact_dsp_flow_with_stats(g)?.0)
}

pub fn exact_dsp_flow_with_stats<G: GraphView>(
    g: &G,
) -> Result<(SubgraphResult, FlowSearchStats)> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.total_edges();
    if m == 0 {
        return Err(Error::EdgelessGraph);
    }
    let pairs = g.collapsed_pairs();

    // Two achievable densities a/b, c/d with b, d <= n differ by at least
    // 1/(n(n-1)); stop once the bracket is narrower than that.
    let sep: u128 = (n as u128) * (n as u128 - 1).max(1);
    let mut den: u128 = 1;
    let mut lo_num: u128 = 0;
    let mut hi_num: u128 = m as u128;
    let mut best_side: Option<Vec<bool>> = None;
    let mut iterations = 0u32;

    while (hi_num - lo_num) * sep > den {
        den *= 2;
        lo_num *= 2;
        hi_num *= 2;
        let mid = (lo_num + hi_num) / 2;
        let network = build_flow_network(&pairs, n, m, mid, den);
        let mut dinic = Dinic::new(network.node_count, &network.arcs);
        let cut = dinic.max_flow(network.source, network.sink);
        iterations += 1;
        let whole = n as i128 * m as i128 * den as i128;
        if cut < whole {
            // Some subset is denser than mid.
            lo_num = mid;
            best_side = Some(dinic.min_cut_side(network.source));
        } else {
            hi_num = mid;
        }
    }

    let side = match best_side {
        Some(s) => s,
        None => {
            // Every probe failed, which cannot happen for m >= 1; probe the
            // lower bracket directly to recover the cut.
            let network = build_flow_network(&pairs, n, m, lo_num, den);
            let mut dinic = Dinic::new(network.node_count, &network.arcs);
            dinic.max_flow(network.source, network.sink);
            dinic.min_cut_side(network.source)
        }
    };
    let nodes: Vec<u32> = (0..n as u32).filter(|&v| side[v as usize]).collect();
    debug_assert!(!nodes.is_empty());
    let result = SubgraphResult::from_nodes(g, nodes);

    // iterations <= ceil(log2(n(n-1)m)) + 2
    let bound_arg = (n as u128) * (n as u128 - 1).max(1) * m as u128;
    let iteration_bound = (128 - (bound_arg - 1).leading_zeros()) + 2;
    Ok((
        result,
        FlowSearchStats {
            iterations,
            iteration_bound,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::Density;
    use crate::exact::brute::{brute_force_densest, DEFAULT_ENUM_CAP};
    use crate::graph::EdgeColoredGraph;

    #[test]
    fn k4_plus_pendant_finds_the_clique() {
        let g = EdgeColoredGraph::from_edge_list("a b 1\na c 1\na d 1\nb c 1\nb d 1\nc d 1\na e 1")
            .unwrap();
        let res = exact_dsp_flow(&g).unwrap();
        assert_eq!(res.density, Density::new(3, 2));
        assert_eq!(res.nodes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_edge_and_triangle() {
        let g = EdgeColoredGraph::from_edge_list("a b 1").unwrap();
        assert_eq!(exact_dsp_flow(&g).unwrap().density, Density::new(1, 2));

        let t = EdgeColoredGraph::from_edge_list("a b 1\nb c 1\na c 1").unwrap();
        assert_eq!(exact_dsp_flow(&t).unwrap().density, Density::new(3, 3));
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        let g = EdgeColoredGraph::from_edge_list("a b 1").unwrap();
        let induced = g.induced_subgraph(&[0]).unwrap();
        assert!(matches!(
            exact_dsp_flow(&induced),
            Err(Error::EdgelessGraph)
        ));
    }

    #[test]
    fn matches_brute_force_on_small_fixtures() {
        let fixtures = [
            "a b 1\nb c 1\nc d 1\nd e 1",
            "a b 1\nb c 1\nc a 1\nc d 1\nd e 1\ne c 1",
            "a b 1\na c 1\na d 1\na e 1",
            "a b 1\nb c 1\nc a 1\nx y 1\ny z 1\nz x 1",
        ];
        for text in fixtures {
            let g = EdgeColoredGraph::from_edge_list(text).unwrap();
            let flow = exact_dsp_flow(&g).unwrap();
            let brute = brute_force_densest(&g, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(flow.density, brute.density, "on {text:?}");
        }
    }

    #[test]
    fn multigraph_density_counts_parallel_edges() {
        let g = EdgeColoredGraph::from_edge_list("a b 1,2\nb c 1\nc a 1\nc d 1").unwrap();
        let m = g.to_multigraph();
        let res = exact_dsp_flow(&m).unwrap();
        assert_eq!(res.density, Density::new(4, 3));
        assert_eq!(res.nodes, vec![0, 1, 2]);
    }

    #[test]
    fn search_respects_iteration_bound() {
        let g = EdgeColoredGraph::from_edge_list("a b 1\nb c 1\nc a 1\nc d 1\nd e 1").unwrap();
        let (_, stats) = exact_dsp_flow_with_stats(&g).unwrap();
        assert!(stats.iterations <= stats.iteration_bound);
    }
}
