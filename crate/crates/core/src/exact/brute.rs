//! Subset-enumeration oracles for small instances.
//!
//! Everything here is exact: densities compare as integer cross products and
//! ties break toward fewer nodes, then the lexicographically smallest node
//! set, so parallel and serial enumeration agree bit for bit.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::requirement::{ColorRequirement, RequirementMode};
use crate::subgraph::SubgraphResult;
use crate::view::GraphView;

/// Default node cap for enumeration (about a million subsets).
pub const DEFAULT_ENUM_CAP: usize = 20;

/// Hard limit from the u64 subset masks.
const MASK_LIMIT: usize = 62;

struct Flat {
    n: usize,
    pi: usize,
    ends: Vec<(u32, u32)>,
    color_off: Vec<u32>,
    color_flat: Vec<u32>,
}

impl Flat {
    fn from_view<G: GraphView>(g: &G) -> Self {
        let mut ends = Vec::new();
        let mut color_off = vec![0u32];
        let mut color_flat = Vec::new();
        g.for_each_edge(&mut |u, v, colors| {
            ends.push((u, v));
            color_flat.extend_from_slice(colors);
            color_off.push(color_flat.len() as u32);
        });
        Flat {
            n: g.node_count(),
            pi: g.color_count(),
            ends,
            color_off,
            color_flat,
        }
    }

    /// Induced edge count for `mask`, filling `counts` per color.
    fn stats(&self, mask: u64, counts: &mut [u64]) -> u64 {
        counts.fill(0);
        let mut edges = 0u64;
        for (i, &(u, v)) in self.ends.iter().enumerate() {
            if (mask >> u) & 1 == 1 && (mask >> v) & 1 == 1 {
                edges += 1;
                let lo = self.color_off[i] as usize;
                let hi = self.color_off[i + 1] as usize;
                for &c in &self.color_flat[lo..hi] {
                    counts[c as usize] += 1;
                }
            }
        }
        edges
    }
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    mask: u64,
    edges: u64,
    size: u32,
}

/// Total preference order: density, then fewer nodes, then lexicographically
/// smaller node index sequence.
fn prefer(a: Candidate, b: Candidate) -> Candidate {
    let lhs = a.edges as u128 * (b.size.max(1) as u128);
    let rhs = b.edges as u128 * (a.size.max(1) as u128);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => return a,
        std::cmp::Ordering::Less => return b,
        std::cmp::Ordering::Equal => {}
    }
    if a.size != b.size {
        return if a.size < b.size { a } else { b };
    }
    // Same size: the set owning the lowest differing bit sorts first.
    let diff = a.mask ^ b.mask;
    if diff == 0 {
        return a;
    }
    let low = diff & diff.wrapping_neg();
    if a.mask & low != 0 {
        a
    } else {
        b
    }
}

fn merge(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(prefer(x, y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn search<F>(flat: &Flat, include_empty: bool, qualifies: F) -> Option<Candidate>
where
    F: Fn(u64, &[u64]) -> bool + Sync,
{
    let total: u64 = 1u64 << flat.n;
    let start: u64 = if include_empty { 0 } else { 1 };
    const CHUNK: u64 = 1 << 12;
    let chunks: Vec<(u64, u64)> = (start..total)
        .step_by(CHUNK as usize)
        .map(|lo| (lo, (lo + CHUNK).min(total)))
        .collect();
    chunks
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut counts = vec![0u64; flat.pi];
            let mut best: Option<Candidate> = None;
            for mask in lo..hi {
                let edges = flat.stats(mask, &mut counts);
                if qualifies(edges, &counts) {
                    let cand = Candidate {
                        mask,
                        edges,
                        size: mask.count_ones(),
                    };
                    best = merge(best, Some(cand));
                }
            }
            best
        })
        .reduce(|| None, merge)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap.min(MASK_LIMIT) {
        return Err(Error::CapExceeded {
            n,
            cap: cap.min(MASK_LIMIT),
        });
    }
    Ok(())
}

fn mask_nodes(mask: u64) -> Vec<u32> {
    (0..64).filter(|&b| (mask >> b) & 1 == 1).collect()
}

/// Exact densest subgraph with at least `h` edges by full enumeration of
/// non-empty node subsets. `h = 0` gives the unconstrained optimum.
pub fn brute_force_at_least_h_edges<G: GraphView>(
    g: &G,
    h: u64,
    cap: usize,
) -> Result<SubgraphResult> {
    check_cap(g.node_count(), cap)?;
    if g.total_edges() < h {
        return Err(Error::Infeasible {
            detail: format!("graph has {} edges, fewer than h = {h}", g.total_edges()),
        });
    }
    let flat = Flat::from_view(g);
    let best = search(&flat, false, |edges, _| edges >= h)
        .expect("whole node set qualifies when m >= h");
    Ok(SubgraphResult::from_nodes(g, mask_nodes(best.mask)))
}

/// Exact unconstrained densest subgraph, for oracle comparisons.
pub fn brute_force_densest<G: GraphView>(g: &G, cap: usize) -> Result<SubgraphResult> {
    brute_force_at_least_h_edges(g, 0, cap)
}

/// Exact colored optimum by full enumeration, for all three requirement
/// modes.
///
/// The empty set participates for `AtMost` and `Exactly` (it is the unique
/// subgraph with all-zero counts); `AtLeast` ranges over non-empty subsets
/// so that an all-zero requirement reproduces the unconstrained optimum.
pub fn brute_force_colored<G: GraphView>(
    g: &G,
    req: &ColorRequirement,
    cap: usize,
) -> Result<SubgraphResult> {
    check_cap(g.node_count(), cap)?;
    req.validate_len(g.color_count())?;
    let totals = g.total_color_counts();
    if matches!(
        req.mode,
        RequirementMode::AtLeast | RequirementMode::Exactly
    ) && totals.iter().zip(&req.h).any(|(c, h)| c < h)
    {
        return Err(Error::Infeasible {
            detail: "whole graph misses a required color count".to_string(),
        });
    }
    let flat = Flat::from_view(g);
    let h = &req.h;
    let best = match req.mode {
        RequirementMode::AtLeast => search(&flat, false, |_, counts| {
            counts.iter().zip(h).all(|(c, r)| c >= r)
        }),
        RequirementMode::AtMost => search(&flat, true, |_, counts| {
            counts.iter().zip(h).all(|(c, r)| c <= r)
        }),
        RequirementMode::Exactly => search(&flat, true, |_, counts| {
            counts.iter().zip(h).all(|(c, r)| c == r)
        }),
    };
    let best = best.ok_or(Error::NoFeasibleSubset)?;
    Ok(SubgraphResult::from_nodes(g, mask_nodes(best.mask)))
}
