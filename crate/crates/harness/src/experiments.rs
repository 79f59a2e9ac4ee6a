//! Experiment building blocks: h-sweeps, random requirement sampling,
//! requirement ladders, color distributions, and adversarial augmentation.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use colordense::exact::exact_dsp_flow;
use colordense::{
    at_least_h_edges_peel_with_trace, greedy_peel_unconstrained, Density, EdgeColoredGraph,
    GraphView, SubgraphResult,
};

use crate::error::{HarnessError, Result};

/// Node count up to which the unconstrained reference uses the exact flow
/// solver; above it the greedy peel stands in and results carry a flag.
pub const EXACT_DSP_NODE_LIMIT: usize = 5000;

/// Unconstrained densest subgraph with provenance: exact when small enough,
/// greedy otherwise.
pub struct DspReference {
    pub result: SubgraphResult,
    pub exact: bool,
}

pub fn unconstrained_reference(g: &EdgeColoredGraph) -> Result<DspReference> {
    if g.n() <= EXACT_DSP_NODE_LIMIT {
        Ok(DspReference {
            result: exact_dsp_flow(g)?,
            exact: true,
        })
    } else {
        Ok(DspReference {
            result: greedy_peel_unconstrained(g)?,
            exact: false,
        })
    }
}

/// One point of the density-versus-h sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub i: u64,
    pub h: u64,
    pub nodes: u64,
    pub edges: u64,
    pub density: Density,
    pub peel_steps: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepTable {
    /// Edge count of the unconstrained densest subgraph.
    pub w: u64,
    /// Whether `w` came from the exact solver.
    pub w_exact: bool,
    pub rows: Vec<SweepRow>,
}

/// Evaluate the at-least-h approximation for h = w + i over an even grid of
/// `points` values of i (plus i = 0), up to m - w.
pub fn sweep_h(g: &EdgeColoredGraph, points: usize) -> Result<SweepTable> {
    let reference = unconstrained_reference(g)?;
    let w = reference.result.edge_count;
    let m = g.m() as u64;
    if m <= w {
        return Err(HarnessError::NothingToSweep { w, m });
    }
    let span = m - w;
    let points = points.max(1) as u64;
    let mut grid: Vec<u64> = vec![0];
    for j in 1..=points {
        grid.push(j * span / points);
    }
    grid.dedup();

    let mut rows = Vec::with_capacity(grid.len());
    for &i in &grid {
        let h = w + i;
        if h == 0 {
            continue;
        }
        let (res, trace) = at_least_h_edges_peel_with_trace(g, h)?;
        rows.push(SweepRow {
            i,
            h,
            nodes: res.node_count() as u64,
            edges: res.edge_count,
            density: res.density,
            peel_steps: trace.steps() as u64,
        });
    }
    Ok(SweepTable {
        w,
        w_exact: reference.exact,
        rows,
    })
}

/// A sampled requirement vector with its demand fraction.
#[derive(Debug, Clone, Serialize)]
pub struct SampledRequirement {
    pub h: Vec<u64>,
    /// sum(h) / sum(g - f): the required fraction of edges beyond the
    /// unconstrained densest subgraph.
    pub lambda: f64,
}

/// Draw `count` requirement vectors with h_c uniform in [f_c, g_c], where
/// f_c counts color-c edges in the unconstrained densest subgraph and g_c
/// in the whole graph. Sampling uses ChaCha8 seeded with `seed`.
pub fn random_color_instances(
    g: &EdgeColoredGraph,
    count: usize,
    seed: u64,
) -> Result<(Vec<SampledRequirement>, DspReference)> {
    let reference = unconstrained_reference(g)?;
    let f = &reference.result.color_counts;
    let totals = g.total_color_counts();
    let span_sum: u64 = totals.iter().zip(f).map(|(g, f)| g - f).sum();
    if span_sum == 0 {
        return Err(HarnessError::DegenerateInterval);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let h: Vec<u64> = f
            .iter()
            .zip(&totals)
            .map(|(&lo, &hi)| rng.random_range(lo..=hi))
            .collect();
        let lambda = h.iter().sum::<u64>() as f64 / span_sum as f64;
        out.push(SampledRequirement { h, lambda });
    }
    Ok((out, reference))
}

/// Requirement ladder: rung i has h_c = floor(i * (t_c - f_c) / steps),
/// for i in 1..=steps.
pub fn requirement_ladder(g: &EdgeColoredGraph, steps: u64) -> Result<Vec<Vec<u64>>> {
    let reference = unconstrained_reference(g)?;
    let f = &reference.result.color_counts;
    let totals = g.total_color_counts();
    let steps = steps.max(1);
    let rungs = (1..=steps)
        .map(|i| {
            f.iter()
                .zip(&totals)
                .map(|(&fc, &tc)| i * (tc - fc) / steps)
                .collect()
        })
        .collect();
    Ok(rungs)
}

/// Per-color edge fractions of the whole graph or a node subset.
#[derive(Debug, Clone, Serialize)]
pub struct ColorShare {
    pub color: String,
    pub count: u64,
    pub fraction: f64,
}

pub fn color_distribution(g: &EdgeColoredGraph, subset: Option<&[u32]>) -> Vec<ColorShare> {
    let counts = match subset {
        Some(s) => g.color_counts(s),
        None => g.total_color_counts(),
    };
    let total: u64 = counts.iter().sum();
    counts
        .iter()
        .enumerate()
        .map(|(c, &count)| ColorShare {
            color: g.color_label(c as u32).to_string(),
            count,
            fraction: if total == 0 {
                0.0
            } else {
                count as f64 / total as f64
            },
        })
        .collect()
}

fn fresh_token(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut token = base.to_string();
    while taken(&token) {
        token.push('_');
    }
    token
}

/// Append two fresh nodes joined by a single edge of a brand-new color.
pub fn adversarial_augment(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    let mut builder = colordense::GraphBuilder::new();
    for e in 0..g.m() as u32 {
        let (u, v) = g.edge_ends(e);
        let colors: Vec<&str> = g
            .edge_color_ids(e)
            .iter()
            .map(|&c| g.color_label(c))
            .collect();
        builder
            .add_edge(g.node_label(u), g.node_label(v), &colors)
            .expect("copying a valid graph");
    }
    let u = fresh_token("adv_u", |t| g.node_id(t).is_some());
    let v = fresh_token("adv_v", |t| g.node_id(t).is_some());
    let color = fresh_token("adv_color", |t| g.color_id(t).is_some());
    builder
        .add_edge(&u, &v, &[color.as_str()])
        .expect("fresh labels cannot collide");
    builder.build().expect("augmenting a valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, SyntheticSpec};

    fn toy() -> EdgeColoredGraph {
        EdgeColoredGraph::from_edge_list("a b 1\na c 1\nb c 2\nc d 2\nd e 1").unwrap()
    }

    #[test]
    fn ladder_arithmetic_matches_the_definition() {
        // t = (10, 4), f = (0, 4) modeled directly.
        let t = [10u64, 4];
        let f = [0u64, 4];
        let rung5: Vec<u64> = f
            .iter()
            .zip(&t)
            .map(|(&fc, &tc)| 5 * (tc - fc) / 10)
            .collect();
        assert_eq!(rung5, vec![5, 0]);
    }

    #[test]
    fn ladder_final_rung_reaches_the_remainder() {
        let g = toy();
        let rungs = requirement_ladder(&g, 10).unwrap();
        let reference = unconstrained_reference(&g).unwrap();
        let totals = g.total_color_counts();
        let last = rungs.last().unwrap();
        for c in 0..g.colors() {
            assert_eq!(last[c], totals[c] - reference.result.color_counts[c]);
        }
    }

    #[test]
    fn sampled_requirements_stay_in_their_intervals() {
        let g = toy();
        let (samples, reference) = random_color_instances(&g, 200, 42).unwrap();
        let totals = g.total_color_counts();
        let f = &reference.result.color_counts;
        let span: u64 = totals.iter().zip(f).map(|(g, f)| g - f).sum();
        let lo = f.iter().sum::<u64>() as f64 / span as f64;
        let hi = 1.0 + lo;
        for s in &samples {
            for c in 0..g.colors() {
                assert!(s.h[c] >= f[c] && s.h[c] <= totals[c]);
            }
            assert!(s.lambda >= lo && s.lambda <= hi);
        }
    }

    #[test]
    fn sampling_is_deterministic_and_count_zero_is_empty() {
        let g = toy();
        let (a, _) = random_color_instances(&g, 5, 42).unwrap();
        let (b, _) = random_color_instances(&g, 5, 42).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let (empty, _) = random_color_instances(&g, 0, 42).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn color_distribution_examples() {
        let mono = EdgeColoredGraph::from_edge_list("a b 1\nb c 1").unwrap();
        let shares = color_distribution(&mono, None);
        assert_eq!(shares.len(), 1);
        assert_eq!(shares[0].fraction, 1.0);

        let tri = EdgeColoredGraph::from_edge_list("a b 1\na c 1\nb c 2").unwrap();
        let shares = color_distribution(&tri, None);
        assert_eq!(shares[0].count, 2);
        assert_eq!(shares[1].count, 1);
        assert!((shares[0].fraction - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn augmentation_adds_two_nodes_one_edge_one_color() {
        let g = toy();
        let aug = adversarial_augment(&g);
        assert_eq!(aug.n(), g.n() + 2);
        assert_eq!(aug.m(), g.m() + 1);
        assert_eq!(aug.colors(), g.colors() + 1);
        // Fresh color has exactly one edge.
        let counts = aug.total_color_counts();
        assert_eq!(counts[g.colors()], 1);
    }

    #[test]
    fn sweep_includes_origin_and_decreasing_feasible_rows() {
        let spec = SyntheticSpec {
            n: 60,
            m: 150,
            colors: 2,
            colors_per_edge: 1,
            planted: Some(6),
            seed: 9,
        };
        let g = generate(&spec).unwrap();
        let table = sweep_h(&g, 10).unwrap();
        assert_eq!(table.rows[0].i, 0);
        for row in &table.rows {
            assert!(row.edges >= row.h);
        }
        for pair in table.rows.windows(2) {
            assert!(pair[0].h < pair[1].h);
        }
    }
}
