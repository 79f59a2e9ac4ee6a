//! Constrained solvers for the at-least-h-colored-edges problem: the
//! deficit-tracked peeling approximation for single-colored edges, its
//! multigraph variant for multi-colored edges, and the halting-peel
//! heuristic baseline.

use crate::error::{Error, Result};
use crate::graph::EdgeColoredGraph;
use crate::peel::{
    at_least_h_edges_peel_tracked, at_least_h_edges_peel_with_trace,
    greedy_peel_unconstrained_with_trace, PeelingTrace,
};
use crate::requirement::{ColorRequirement, RequirementMode};
use crate::subgraph::SubgraphResult;
use crate::view::GraphView;

/// How `col_approx` restores missing colored edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PatchStrategy {
    /// Re-add both endpoints of every edge whose removal created a color
    /// deficit (collected during the peel). Default; single pass.
    #[default]
    DeficitEndpoints,
    /// Peel without tracking, then add missing edges color by color,
    /// preferring edges with one endpoint already inside.
    GreedyEdges,
}

fn validate_colored_input(
    g: &EdgeColoredGraph,
    req: &ColorRequirement,
    single_colored: bool,
) -> Result<()> {
    req.validate_len(g.colors())?;
    req.expect_mode(RequirementMode::AtLeast)?;
    if single_colored {
        for e in 0..g.m() as u32 {
            if g.edge_color_ids(e).len() > 1 {
                let (u, v) = g.edge_ends(e);
                return Err(Error::MultiColoredEdge {
                    edge: format!("{{{}, {}}}", g.node_label(u), g.node_label(v)),
                });
            }
        }
    }
    let feas = g.check_feasibility(req)?;
    if !feas.feasible {
        return Err(Error::Infeasible {
            detail: format!("whole-graph color slack {:?}", feas.slack),
        });
    }
    Ok(())
}

fn union_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out.dedup();
    out
}

/// Approximation for the at-least-h-colored-edges densest subgraph on
/// graphs whose edges each carry exactly one color.
///
/// Peels against the threshold `sum(h)`, tracking deficit endpoints, and
/// returns the subgraph induced by the best prefix plus the tracked set.
/// The result always satisfies the requirement componentwise.
pub fn col_approx(g: &EdgeColoredGraph, req: &ColorRequirement) -> Result<SubgraphResult> {
    Ok(col_approx_with(g, req, PatchStrategy::DeficitEndpoints)?.0)
}

pub fn col_approx_with(
    g: &EdgeColoredGraph,
    req: &ColorRequirement,
    strategy: PatchStrategy,
) -> Result<(SubgraphResult, PeelingTrace)> {
    validate_colored_input(g, req, true)?;
    if req.total() == 0 {
        // No constraint binds; this is the unconstrained greedy peel.
        let (res, trace) = greedy_peel_unconstrained_with_trace(g)?;
        return Ok((res, trace));
    }
    match strategy {
        PatchStrategy::DeficitEndpoints => {
            let tracked = at_least_h_edges_peel_tracked(g, req)?;
            let nodes = union_sorted(&tracked.result.nodes, &tracked.deficit_nodes);
            let result = SubgraphResult::from_nodes(g, nodes);
            debug_assert!(result.satisfies(req));
            Ok((result, tracked.trace))
        }
        PatchStrategy::GreedyEdges => {
            let (prefix, trace) = at_least_h_edges_peel_with_trace(g, req.total())?;
            let result = patch_missing_edges(g, req, prefix)?;
            debug_assert!(result.satisfies(req));
            Ok((result, trace))
        }
    }
}

/// Add `max(0, h_i - f_i)` edges of each color to the prefix, growing the
/// node set. Edge choice prefers color-i edges with an endpoint already
/// inside (adds at most one node), falling back to the smallest edge index.
fn patch_missing_edges(
    g: &EdgeColoredGraph,
    req: &ColorRequirement,
    prefix: SubgraphResult,
) -> Result<SubgraphResult> {
    let mut inside = vec![false; g.n()];
    for &v in &prefix.nodes {
        inside[v as usize] = true;
    }
    let mut counts = prefix.color_counts.clone();
    let mut nodes = prefix.nodes.clone();
    for color in 0..req.h.len() {
        while counts[color] < req.h[color] {
            let pick = pick_patch_edge(g, color as u32, &inside)
                .expect("feasibility guarantees an uncovered edge of the color");
            let (u, v) = g.edge_ends(pick);
            for w in [u, v] {
                if !inside[w as usize] {
                    inside[w as usize] = true;
                    nodes.push(w);
                    // Newly induced edges update every color they carry.
                    for &(nbr, e) in g.neighbors(w) {
                        if inside[nbr as usize] {
                            for &c in g.edge_color_ids(e) {
                                counts[c as usize] += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    nodes.sort_unstable();
    let result = SubgraphResult::from_nodes(g, nodes);
    Ok(result)
}

fn pick_patch_edge(g: &EdgeColoredGraph, color: u32, inside: &[bool]) -> Option<u32> {
    let mut fallback = None;
    for e in 0..g.m() as u32 {
        if g.edge_color_ids(e) != [color] {
            continue;
        }
        let (u, v) = g.edge_ends(e);
        let (iu, iv) = (inside[u as usize], inside[v as usize]);
        if iu && iv {
            continue; // already induced
        }
        if iu || iv {
            return Some(e);
        }
        if fallback.is_none() {
            fallback = Some(e);
        }
    }
    fallback
}

/// Approximation for the at-least-h-colored-edges densest subgraph when
/// edges may carry several colors: expand to the parallel-edge multigraph,
/// run the tracked peel with multigraph degrees, and patch any color still
/// short by pulling in a node pair (all its parallel edges come along).
///
/// The returned density counts parallel edges; `simple_density` carries the
/// plain |E(S)|/|S| of the same node set.
pub fn col_approx_multi(g: &EdgeColoredGraph, req: &ColorRequirement) -> Result<SubgraphResult> {
    Ok(col_approx_multi_with_trace(g, req)?.0)
}

pub fn col_approx_multi_with_trace(
    g: &EdgeColoredGraph,
    req: &ColorRequirement,
) -> Result<(SubgraphResult, PeelingTrace)> {
    validate_colored_input(g, req, false)?;
    let m = g.to_multigraph();
    if req.total() == 0 {
        let (mut res, trace) = greedy_peel_unconstrained_with_trace(&m)?;
        res.simple_density = Some(g.density(&res.nodes));
        return Ok((res, trace));
    }
    let tracked = at_least_h_edges_peel_tracked(&m, req)?;
    let mut nodes = union_sorted(&tracked.result.nodes, &tracked.deficit_nodes);
    let mut counts = m.color_counts(&nodes);

    // The tracked set already restores every deficit; this loop is the
    // stated fallback and normally never runs.
    loop {
        let Some(color) = (0..req.h.len()).find(|&c| counts[c] < req.h[c]) else {
            break;
        };
        let mut inside = vec![false; m.n()];
        for &v in &nodes {
            inside[v as usize] = true;
        }
        let pick = (0..m.medge_count() as u32)
            .find(|&e| {
                let (u, v) = m.medge_ends(e);
                m.medge_color(e) as usize == color
                    && !(inside[u as usize] && inside[v as usize])
            })
            .expect("feasibility guarantees an uncovered edge of the color");
        let (u, v) = m.medge_ends(pick);
        nodes = union_sorted(&nodes, &[u, v]);
        counts = m.color_counts(&nodes);
    }

    let mut result = SubgraphResult::from_nodes(&m, nodes);
    result.simple_density = Some(g.density(&result.nodes));
    debug_assert!(result.satisfies(req));
    Ok((result, tracked.trace))
}

/// Baseline: peel minimum-degree nodes for as long as every color
/// requirement stays satisfied, then return the best-density prefix seen.
/// Halts the moment the minimum-degree node cannot be removed.
pub fn heuristic_peel(g: &EdgeColoredGraph, req: &ColorRequirement) -> Result<SubgraphResult> {
    validate_colored_input(g, req, false)?;
    heuristic_core(g, req)
}

fn heuristic_core(g: &EdgeColoredGraph, req: &ColorRequirement) -> Result<SubgraphResult> {
    let n = g.n();
    let mut queue = crate::peel::bucket_queue_for(g);
    let mut counts = g.total_color_counts();
    let mut removed_at: Vec<u32> = Vec::with_capacity(n);
    let mut m_rem = g.total_edges();
    let mut best: Option<(crate::density::Density, usize)> = None;
    let mut step = 0usize;

    let mut touched: Vec<u32> = Vec::new();
    let mut delta = vec![0u64; g.colors()];

    loop {
        if n - step > 0 {
            let d = crate::density::Density::new(m_rem, n - step);
            // >= moves ties to the smaller prefix.
            if best.map_or(true, |(bd, _)| d >= bd) {
                best = Some((d, step));
            }
        }
        let Some(v) = queue.peek_min() else { break };

        // Would removing v drop any color below its requirement?
        touched.clear();
        for &(nbr, e) in g.neighbors(v) {
            if !queue.is_alive(nbr) {
                continue;
            }
            for &c in g.edge_color_ids(e) {
                if delta[c as usize] == 0 {
                    touched.push(c);
                }
                delta[c as usize] += 1;
            }
        }
        let violates = touched
            .iter()
            .any(|&c| counts[c as usize] - delta[c as usize] < req.h[c as usize]);
        if violates {
            for &c in &touched {
                delta[c as usize] = 0;
            }
            break;
        }
        for &c in &touched {
            counts[c as usize] -= delta[c as usize];
            delta[c as usize] = 0;
        }

        queue.pop_min();
        for &(nbr, _) in g.neighbors(v) {
            if queue.is_alive(nbr) {
                m_rem -= 1;
                queue.decrement(nbr);
            }
        }
        removed_at.push(v);
        step += 1;
    }

    let (_, best_step) = best.expect("graph starts non-empty");
    let mut alive = vec![true; n];
    for &v in &removed_at[..best_step] {
        alive[v as usize] = false;
    }
    let nodes: Vec<u32> = (0..n as u32).filter(|&v| alive[v as usize]).collect();
    let result = SubgraphResult::from_nodes(g, nodes);
    debug_assert!(result.satisfies(req));
    Ok(result)
}
