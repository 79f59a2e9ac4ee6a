//! Cross-checks of the approximation algorithms against the exact oracles
//! on seeded random instances small enough to enumerate.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use colordense::exact::{
    brute_force_at_least_h_edges, brute_force_colored, brute_force_densest, exact_dsp_flow,
    DEFAULT_ENUM_CAP,
};
use colordense::{
    at_least_h_edges_peel, col_approx, col_approx_multi, greedy_peel_unconstrained,
    heuristic_peel, ColorRequirement, EdgeColoredGraph, GraphBuilder, GraphView,
};

/// Minimal seeded G(n, m) generator with uniform colors; independent of the
/// bench harness so oracle tests do not share code with what they check.
fn random_graph(n: usize, m: usize, colors: usize, cpe: usize, rng: &mut ChaCha8Rng) -> EdgeColoredGraph {
    let max_m = n * (n - 1) / 2;
    let m = m.min(max_m).max(1);
    let mut chosen = std::collections::HashSet::new();
    let mut builder = GraphBuilder::new();
    // Seed labels in index order so internal ids are predictable.
    while chosen.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if !chosen.insert(key) {
            continue;
        }
        let k = rng.random_range(1..=cpe);
        let mut cs: Vec<String> = Vec::new();
        while cs.len() < k {
            let c = format!("c{}", rng.random_range(0..colors));
            if !cs.contains(&c) {
                cs.push(c);
            }
        }
        let cs_ref: Vec<&str> = cs.iter().map(|s| s.as_str()).collect();
        builder
            .add_edge(&format!("v{}", key.0), &format!("v{}", key.1), &cs_ref)
            .unwrap();
    }
    builder.build().unwrap()
}

/// Random feasible at-least requirement: h_c uniform in [0, total_c].
fn random_requirement(g: &EdgeColoredGraph, rng: &mut ChaCha8Rng) -> ColorRequirement {
    let totals = g.total_color_counts();
    let h = totals
        .iter()
        .map(|&t| rng.random_range(0..=t))
        .collect();
    ColorRequirement::at_least(h)
}

#[test]
fn flow_agrees_with_enumeration_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..40 {
        let n = rng.random_range(4..=10);
        let m = rng.random_range(n - 1..=(n * (n - 1) / 2).min(3 * n));
        let g = random_graph(n, m, 2, 1, &mut rng);
        let flow = exact_dsp_flow(&g).unwrap();
        let brute = brute_force_densest(&g, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(flow.density, brute.density, "case {case}");
    }
}

#[test]
fn greedy_peel_is_within_factor_two_of_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for case in 0..40 {
        let n = rng.random_range(6..=24);
        let m = rng.random_range(n..=3 * n);
        let g = random_graph(n, m, 2, 1, &mut rng);
        let greedy = greedy_peel_unconstrained(&g).unwrap();
        let exact = exact_dsp_flow(&g).unwrap();
        assert!(
            greedy.density.at_least_half_of(exact.density),
            "case {case}: greedy {} vs exact {}",
            greedy.density,
            exact.density
        );
        assert!(greedy.density <= exact.density);
    }
}

#[test]
fn at_least_h_peel_is_feasible_and_never_super_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for case in 0..60 {
        let n = rng.random_range(5..=14);
        let m = rng.random_range(n - 1..=(n * (n - 1) / 2).min(3 * n));
        let g = random_graph(n, m, 1, 1, &mut rng);
        let h = rng.random_range(1..=g.m() as u64);
        let approx = at_least_h_edges_peel(&g, h).unwrap();
        assert!(approx.edge_count >= h, "case {case}: infeasible output");
        let opt = brute_force_at_least_h_edges(&g, h, DEFAULT_ENUM_CAP).unwrap();
        assert!(
            approx.density <= opt.density,
            "case {case}: approximation beat the oracle"
        );
    }
}

#[test]
fn oracle_optimum_is_monotone_in_h() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..10 {
        let n = rng.random_range(6..=10);
        let g = random_graph(n, 2 * n, 1, 1, &mut rng);
        let mut last = None;
        for h in 1..=g.m() as u64 {
            let opt = brute_force_at_least_h_edges(&g, h, DEFAULT_ENUM_CAP)
                .unwrap()
                .density;
            if let Some(prev) = last {
                assert!(opt <= prev, "optimum increased from h-1 to h={h}");
            }
            last = Some(opt);
        }
    }
}

#[test]
fn col_approx_is_feasible_and_never_super_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for case in 0..50 {
        let n = rng.random_range(5..=13);
        let m = rng.random_range(n - 1..=(n * (n - 1) / 2).min(3 * n));
        let colors = rng.random_range(1..=3);
        let g = random_graph(n, m, colors, 1, &mut rng);
        let req = random_requirement(&g, &mut rng);
        let approx = col_approx(&g, &req).unwrap();
        assert!(approx.satisfies(&req), "case {case}: infeasible output");
        let opt = brute_force_colored(&g, &req, DEFAULT_ENUM_CAP).unwrap();
        assert!(
            approx.density <= opt.density,
            "case {case}: {} beat oracle {}",
            approx.density,
            opt.density
        );
    }
}

#[test]
fn col_approx_multi_is_feasible_and_never_super_optimal_on_the_multigraph() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for case in 0..40 {
        let n = rng.random_range(5..=11);
        let m = rng.random_range(n - 1..=(n * (n - 1) / 2).min(3 * n));
        let colors = rng.random_range(2..=3);
        let g = random_graph(n, m, colors, 3.min(colors), &mut rng);
        let req = random_requirement(&g, &mut rng);
        let approx = col_approx_multi(&g, &req).unwrap();
        assert!(approx.satisfies(&req), "case {case}: infeasible output");
        let mg = g.to_multigraph();
        let opt = brute_force_colored(&mg, &req, DEFAULT_ENUM_CAP).unwrap();
        assert!(
            approx.density <= opt.density,
            "case {case}: multigraph density {} beat oracle {}",
            approx.density,
            opt.density
        );
    }
}

#[test]
fn heuristic_is_feasible_and_never_super_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(79);
    for case in 0..50 {
        let n = rng.random_range(5..=13);
        let m = rng.random_range(n - 1..=(n * (n - 1) / 2).min(3 * n));
        let colors = rng.random_range(1..=3);
        let g = random_graph(n, m, colors, 1, &mut rng);
        let req = random_requirement(&g, &mut rng);
        let heur = heuristic_peel(&g, &req).unwrap();
        assert!(heur.satisfies(&req), "case {case}: infeasible output");
        let opt = brute_force_colored(&g, &req, DEFAULT_ENUM_CAP).unwrap();
        assert!(heur.density <= opt.density, "case {case}");
    }
}

#[test]
fn colored_oracle_with_zero_requirement_matches_unconstrained() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for _ in 0..15 {
        let n = rng.random_range(4..=10);
        let g = random_graph(n, 2 * n, 3, 2, &mut rng);
        let zero = ColorRequirement::at_least(vec![0; g.colors()]);
        let colored = brute_force_colored(&g, &zero, DEFAULT_ENUM_CAP).unwrap();
        let plain = brute_force_densest(&g, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(colored.density, plain.density);
        assert_eq!(colored.nodes, plain.nodes);
    }
}

#[test]
fn tracked_deficit_sets_stay_bounded_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for _ in 0..25 {
        let n = rng.random_range(6..=16);
        let m = rng.random_range(n..=3 * n);
        let colors = rng.random_range(2..=4);
        let g = random_graph(n, m, colors, 1, &mut rng);
        let req = random_requirement(&g, &mut rng);
        if g.check_feasibility(&req).unwrap().feasible && req.total() > 0 {
            let t = colordense::at_least_h_edges_peel_tracked(&g, &req).unwrap();
            for i in 0..=t.trace.steps() {
                let row = t.trace.color_row(i).unwrap();
                let deficit: u64 = row
                    .iter()
                    .zip(&req.h)
                    .map(|(&c, &h)| h.saturating_sub(c))
                    .sum();
                assert!(t.trace.deficit_len[i] as u64 <= 2 * deficit);
            }
        }
    }
}
