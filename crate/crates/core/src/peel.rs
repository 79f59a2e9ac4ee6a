//! Min-degree peeling: degeneracy ordering, the unconstrained greedy
//! densest-subgraph approximation, the at-least-h-edges approximation, and
//! its deficit-tracked variant used by the colored solvers.
//!
//! Peeling repeatedly removes a minimum-degree node (parallel edges each
//! count one toward multigraph degrees) and records the full prefix
//! statistics. Ties among minimum-degree nodes break toward the smallest
//! internal index, and ties among equal-density prefixes toward the smaller
//! node set, so reruns are bit-identical.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::density::Density;
use crate::error::{Error, Result};
use crate::requirement::{ColorRequirement, RequirementMode};
use crate::subgraph::SubgraphResult;
use crate::view::GraphView;

/// Bucket queue over node degrees with smallest-index tie-breaking.
///
/// Each bucket is a lazy min-heap: nodes are pushed again on every degree
/// change and stale entries are skipped at pop time. Degrees only decrease
/// during peeling, so every (node, degree) pair is pushed at most once and
/// the total number of heap operations is bounded by the initial degree sum.
pub(crate) struct BucketQueue {
    buckets: Vec<BinaryHeap<Reverse<u32>>>,
    deg: Vec<u32>,
    alive: Vec<bool>,
    cur: usize,
    remaining: usize,
}

impl BucketQueue {
    pub(crate) fn new(degrees: Vec<u32>) -> Self {
        let max_deg = degrees.iter().copied().max().unwrap_or(0) as usize;
        let mut buckets: Vec<BinaryHeap<Reverse<u32>>> = Vec::with_capacity(max_deg + 1);
        buckets.resize_with(max_deg + 1, BinaryHeap::new);
        for (v, &d) in degrees.iter().enumerate() {
            buckets[d as usize].push(Reverse(v as u32));
        }
        let remaining = degrees.len();
        BucketQueue {
            buckets,
            deg: degrees,
            alive: vec![true; remaining],
            cur: 0,
            remaining,
        }
    }

    /// Remove and return the smallest-index node of minimum degree.
    pub(crate) fn pop_min(&mut self) -> Option<u32> {
        if self.remaining == 0 {
            return None;
        }
        loop {
            while self.cur < self.buckets.len() && self.buckets[self.cur].is_empty() {
                self.cur += 1;
            }
            debug_assert!(self.cur < self.buckets.len());
            let Reverse(v) = self.buckets[self.cur].pop().unwrap();
            let vu = v as usize;
            if self.alive[vu] && self.deg[vu] as usize == self.cur {
                self.alive[vu] = false;
                self.remaining -= 1;
                return Some(v);
            }
        }
    }

    /// Peek the smallest-index node of minimum degree without removing it.
    pub(crate) fn peek_min(&mut self) -> Option<u32> {
        if self.remaining == 0 {
            return None;
        }
        loop {
            while self.cur < self.buckets.len() && self.buckets[self.cur].is_empty() {
                self.cur += 1;
            }
            let Reverse(v) = *self.buckets[self.cur].peek().unwrap();
            let vu = v as usize;
            if self.alive[vu] && self.deg[vu] as usize == self.cur {
                return Some(v);
            }
            self.buckets[self.cur].pop();
        }
    }

    pub(crate) fn is_alive(&self, v: u32) -> bool {
        self.alive[v as usize]
    }

    pub(crate) fn decrement(&mut self, v: u32) {
        let vu = v as usize;
        debug_assert!(self.alive[vu] && self.deg[vu] > 0);
        self.deg[vu] -= 1;
        let d = self.deg[vu] as usize;
        self.buckets[d].push(Reverse(v));
        if d < self.cur {
            self.cur = d;
        }
    }
}

/// Full record of one peeling run.
///
/// Step `i` describes the graph after `i` removals; step 0 is the input
/// graph. `per_color` is flat with stride `color_count` and stays empty when
/// color recording is off.
#[derive(Debug, Clone)]
pub struct PeelingTrace {
    pub n: u32,
    pub color_count: usize,
    pub removal_order: Vec<u32>,
    /// Remaining edge count after each step; length `steps() + 1`.
    pub prefix_edges: Vec<u64>,
    pub per_color: Vec<u64>,
    /// Deficit-set nodes in insertion order (deduplicated).
    pub deficit_nodes: Vec<u32>,
    /// Prefix length into `deficit_nodes` per step; the set is monotone.
    pub deficit_len: Vec<u32>,
    /// Edge threshold the run was stopped against (0 when unconstrained).
    pub threshold: u64,
    /// Last step whose remaining edge count is still >= threshold.
    pub i_max: usize,
    /// Adjacency entries scanned; at most twice the edge count.
    pub edge_visits: u64,
}

impl PeelingTrace {
    pub fn steps(&self) -> usize {
        self.removal_order.len()
    }

    pub fn remaining_nodes(&self, step: usize) -> u64 {
        self.n as u64 - step as u64
    }

    pub fn density_at(&self, step: usize) -> Density {
        Density::new(self.prefix_edges[step], self.remaining_nodes(step) as usize)
    }

    pub fn color_row(&self, step: usize) -> Option<&[u64]> {
        if self.per_color.is_empty() || self.color_count == 0 {
            return None;
        }
        let lo = step * self.color_count;
        Some(&self.per_color[lo..lo + self.color_count])
    }

    pub fn deficit_set_at(&self, step: usize) -> &[u32] {
        &self.deficit_nodes[..self.deficit_len[step] as usize]
    }

    /// The step with maximum density among steps `0..=i_max` that keep at
    /// least one node; density ties prefer the smaller node set.
    pub fn best_step(&self) -> Option<usize> {
        let mut best: Option<(Density, usize)> = None;
        for i in 0..=self.i_max.min(self.steps()) {
            if self.remaining_nodes(i) == 0 {
                continue;
            }
            let d = self.density_at(i);
            // >= moves ties to the later (smaller) prefix.
            if best.map_or(true, |(bd, _)| d >= bd) {
                best = Some((d, i));
            }
        }
        best.map(|(_, i)| i)
    }

    /// Node set remaining after `step` removals, sorted ascending.
    pub fn prefix_nodes(&self, step: usize) -> Vec<u32> {
        let mut alive = vec![true; self.n as usize];
        for &v in &self.removal_order[..step] {
            alive[v as usize] = false;
        }
        (0..self.n).filter(|&v| alive[v as usize]).collect()
    }

    /// Debug rows: step, removed node, remaining nodes and edges, per-color
    /// remaining counts.
    pub fn to_json(&self, node_label: impl Fn(u32) -> String) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..=self.steps())
            .map(|i| {
                serde_json::json!({
                    "step": i,
                    "removed": if i == 0 {
                        serde_json::Value::Null
                    } else {
                        serde_json::Value::String(node_label(self.removal_order[i - 1]))
                    },
                    "remaining_nodes": self.remaining_nodes(i),
                    "remaining_edges": self.prefix_edges[i],
                    "remaining_per_color": self.color_row(i),
                })
            })
            .collect();
        serde_json::json!({
            "threshold": self.threshold,
            "i_max": self.i_max,
            "edge_visits": self.edge_visits,
            "steps": rows,
        })
    }
}

struct PeelConfig<'a> {
    /// Stop once the remaining edge count drops below this value.
    stop_below: Option<u64>,
    /// Record per-color remaining counts at every step.
    record_colors: bool,
    /// Track deficit endpoints against this requirement vector.
    track: Option<&'a [u64]>,
}

fn run_peel<G: GraphView>(g: &G, cfg: PeelConfig<'_>) -> PeelingTrace {
    let n = g.node_count();
    let pi = g.color_count();
    let record_colors = cfg.record_colors || cfg.track.is_some();

    let degrees: Vec<u32> = (0..n as u32).map(|v| g.neighbors(v).len() as u32).collect();
    let mut queue = BucketQueue::new(degrees);

    let mut m_rem = g.total_edges();
    let mut counts = if record_colors {
        g.total_color_counts()
    } else {
        Vec::new()
    };

    let mut trace = PeelingTrace {
        n: n as u32,
        color_count: pi,
        removal_order: Vec::with_capacity(n),
        prefix_edges: Vec::with_capacity(n + 1),
        per_color: Vec::new(),
        deficit_nodes: Vec::new(),
        deficit_len: Vec::with_capacity(n + 1),
        threshold: cfg.stop_below.unwrap_or(0),
        i_max: 0,
        edge_visits: 0,
    };
    let mut in_deficit_set = vec![false; if cfg.track.is_some() { n } else { 0 }];

    trace.prefix_edges.push(m_rem);
    if record_colors {
        trace.per_color.extend_from_slice(&counts);
    }
    trace.deficit_len.push(0);

    loop {
        if let Some(h) = cfg.stop_below {
            if m_rem < h {
                break;
            }
        }
        let Some(v) = queue.pop_min() else { break };

        for &(nbr, e) in g.neighbors(v) {
            trace.edge_visits += 1;
            if !queue.is_alive(nbr) {
                continue;
            }
            m_rem -= 1;
            if !counts.is_empty() {
                for &c in g.edge_colors(e) {
                    let cu = c as usize;
                    counts[cu] -= 1;
                    if let Some(h) = cfg.track {
                        if h[cu] > 0 && counts[cu] < h[cu] {
                            for node in [v, nbr] {
                                if !in_deficit_set[node as usize] {
                                    in_deficit_set[node as usize] = true;
                                    trace.deficit_nodes.push(node);
                                }
                            }
                        }
                    }
                }
            }
            queue.decrement(nbr);
        }

        trace.removal_order.push(v);
        trace.prefix_edges.push(m_rem);
        if record_colors {
            trace.per_color.extend_from_slice(&counts);
        }
        trace.deficit_len.push(trace.deficit_nodes.len() as u32);
    }

    let h = cfg.stop_below.unwrap_or(0);
    trace.i_max = (0..trace.prefix_edges.len())
        .rev()
        .find(|&i| trace.prefix_edges[i] >= h)
        .unwrap_or(0);
    trace
}

/// Peel the graph to exhaustion, recording the full prefix statistics.
pub fn degeneracy_peel<G: GraphView>(g: &G) -> PeelingTrace {
    run_peel(
        g,
        PeelConfig {
            stop_below: None,
            record_colors: true,
            track: None,
        },
    )
}

fn result_at_step<G: GraphView>(g: &G, trace: &PeelingTrace, step: usize) -> SubgraphResult {
    SubgraphResult::from_nodes(g, trace.prefix_nodes(step))
}

/// The classical greedy densest-subgraph approximation: the best-density
/// prefix of the min-degree peeling order. Guaranteed within a factor two of
/// the optimum.
pub fn greedy_peel_unconstrained<G: GraphView>(g: &G) -> Result<SubgraphResult> {
    Ok(greedy_peel_unconstrained_with_trace(g)?.0)
}

pub fn greedy_peel_unconstrained_with_trace<G: GraphView>(
    g: &G,
) -> Result<(SubgraphResult, PeelingTrace)> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let trace = run_peel(
        g,
        PeelConfig {
            stop_below: None,
            record_colors: false,
            track: None,
        },
    );
    let step = trace.best_step().expect("non-empty graph has a prefix");
    Ok((result_at_step(g, &trace, step), trace))
}

/// Approximation for the densest subgraph with at least `h` edges: the
/// best-density peeling prefix among those that still have `h` edges.
pub fn at_least_h_edges_peel<G: GraphView>(g: &G, h: u64) -> Result<SubgraphResult> {
    Ok(at_least_h_edges_peel_with_trace(g, h)?.0)
}

pub fn at_least_h_edges_peel_with_trace<G: GraphView>(
    g: &G,
    h: u64,
) -> Result<(SubgraphResult, PeelingTrace)> {
    if h == 0 {
        return Err(Error::ZeroParameter { name: "h" });
    }
    if g.total_edges() < h {
        return Err(Error::Infeasible {
            detail: format!("graph has {} edges, fewer than h = {h}", g.total_edges()),
        });
    }
    let trace = run_peel(
        g,
        PeelConfig {
            stop_below: Some(h),
            record_colors: false,
            track: None,
        },
    );
    let step = trace.best_step().expect("feasible h leaves a prefix");
    debug_assert!(trace.prefix_edges[step] >= h);
    Ok((result_at_step(g, &trace, step), trace))
}

/// Output of the deficit-tracked peel backing the colored solvers.
#[derive(Debug, Clone)]
pub struct TrackedPeel {
    /// The chosen prefix, before deficit endpoints are added back.
    pub result: SubgraphResult,
    /// Deficit endpoints accumulated up to the chosen step, sorted.
    pub deficit_nodes: Vec<u32>,
    pub step: usize,
    pub trace: PeelingTrace,
}

/// Peel against the edge threshold `sum(h)`, collecting both endpoints of
/// every edge whose removal pushed its color below the requirement. Adding
/// the collected set back to the returned prefix restores feasibility.
pub fn at_least_h_edges_peel_tracked<G: GraphView>(
    g: &G,
    req: &ColorRequirement,
) -> Result<TrackedPeel> {
    req.validate_len(g.color_count())?;
    req.expect_mode(RequirementMode::AtLeast)?;
    let feas = {
        let counts = g.total_color_counts();
        counts.iter().zip(&req.h).all(|(c, h)| c >= h)
    };
    if !feas {
        return Err(Error::Infeasible {
            detail: "whole graph misses a required color count".to_string(),
        });
    }
    let trace = run_peel(
        g,
        PeelConfig {
            stop_below: Some(req.total()),
            record_colors: true,
            track: Some(&req.h),
        },
    );
    let step = trace.best_step().expect("feasible requirement leaves a prefix");
    let mut deficit_nodes = trace.deficit_set_at(step).to_vec();
    deficit_nodes.sort_unstable();
    let result = result_at_step(g, &trace, step);
    Ok(TrackedPeel {
        result,
        deficit_nodes,
        step,
        trace,
    })
}

/// Queue over current degrees of `g`, shared with the heuristic solver.
pub(crate) fn bucket_queue_for<G: GraphView>(g: &G) -> BucketQueue {
    let degrees: Vec<u32> = (0..g.node_count() as u32)
        .map(|v| g.neighbors(v).len() as u32)
        .collect();
    BucketQueue::new(degrees)
}

/// Smallest node count of any graph with `h` edges and at most `p` parallel
/// edges per pair: the least k with `p * k * (k-1) / 2 >= h`, computed with
/// integer arithmetic so perfect-square boundaries are exact.
pub fn lower_bound_nodes(h: u64, p: u64) -> Result<u64> {
    if h == 0 {
        return Err(Error::ZeroParameter { name: "h" });
    }
    if p == 0 {
        return Err(Error::ZeroParameter { name: "p" });
    }
    let fits = |k: u64| -> bool { p as u128 * k as u128 * (k as u128 - 1) / 2 >= h as u128 };
    // Float start, exact fix-up.
    let guess = (0.5 + ((p as f64).powi(2) + 8.0 * h as f64 * p as f64).sqrt() / (2.0 * p as f64))
        .ceil() as u64;
    let mut k = guess.max(1);
    while k > 1 && fits(k - 1) {
        k -= 1;
    }
    while !fits(k) {
        k += 1;
    }
    Ok(k)
}
