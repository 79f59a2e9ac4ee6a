//! Running algorithms over instance sets: feasibility re-validation,
//! relative errors against the enumeration oracle, aggregate quality
//! statistics, and repeated timing.

use std::time::Instant;

use serde::Serialize;

use colordense::exact::{brute_force_colored, DEFAULT_ENUM_CAP};
use colordense::{
    col_approx, col_approx_multi, heuristic_peel, ColorRequirement, Density, EdgeColoredGraph,
    GraphView, SubgraphResult,
};

use crate::error::{HarnessError, Result};

/// Algorithms the evaluator can run on a colored instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Algorithm {
    ColApprox,
    ColApproxMulti,
    Heuristic,
    /// The enumeration oracle itself, for self-comparison runs.
    Brute,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::ColApprox => "colapprox",
            Algorithm::ColApproxMulti => "colapprox_multi",
            Algorithm::Heuristic => "heuristic",
            Algorithm::Brute => "brute",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "colapprox" => Ok(Algorithm::ColApprox),
            "colapprox_multi" | "colapprox-multi" => Ok(Algorithm::ColApproxMulti),
            "heuristic" => Ok(Algorithm::Heuristic),
            "brute" => Ok(Algorithm::Brute),
            other => Err(HarnessError::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// One concrete colored problem instance.
pub struct ColoredInstance {
    pub id: String,
    pub graph: EdgeColoredGraph,
    pub requirement: ColorRequirement,
    /// Solve on the parallel-edge multigraph (for multi-colored edges).
    pub multi: bool,
}

/// One algorithm run on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub instance: String,
    pub algorithm: String,
    pub nodes: u64,
    pub edges: u64,
    pub density_num: u64,
    pub density_den: u64,
    pub density: f64,
    pub feasible: bool,
    pub rel_error_pct: Option<f64>,
    pub optimal: Option<bool>,
    pub within_one_pct: Option<bool>,
    pub peel_steps: Option<u64>,
}

/// Timing of one algorithm on one instance over repeated runs.
#[derive(Debug, Clone, Serialize)]
pub struct TimingRecord {
    pub instance: String,
    pub algorithm: String,
    pub repeats: u32,
    pub mean_ms: f64,
    pub std_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgorithmSummary {
    pub algorithm: String,
    pub runs: u64,
    pub pct_optimal: f64,
    pub pct_within_one: f64,
    pub mean_error_pct: f64,
    pub std_error_pct: f64,
    pub median_error_pct: f64,
    pub max_error_pct: f64,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Summary {
    pub algorithms: Vec<AlgorithmSummary>,
}

#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Compare against the enumeration oracle (instances must fit the cap).
    pub oracle: bool,
    pub oracle_cap: usize,
    /// Timing repetitions; 0 skips timing entirely.
    pub repeats: u32,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            oracle: false,
            oracle_cap: DEFAULT_ENUM_CAP,
            repeats: 0,
        }
    }
}

fn run_algorithm(inst: &ColoredInstance, algo: Algorithm, cap: usize) -> Result<SubgraphResult> {
    let res = match algo {
        Algorithm::ColApprox => col_approx(&inst.graph, &inst.requirement)?,
        Algorithm::ColApproxMulti => col_approx_multi(&inst.graph, &inst.requirement)?,
        Algorithm::Heuristic => heuristic_peel(&inst.graph, &inst.requirement)?,
        Algorithm::Brute => oracle_result(inst, cap)?,
    };
    Ok(res)
}

fn oracle_result(inst: &ColoredInstance, cap: usize) -> Result<SubgraphResult> {
    if inst.multi {
        let mg = inst.graph.to_multigraph();
        Ok(brute_force_colored(&mg, &inst.requirement, cap)?)
    } else {
        Ok(brute_force_colored(&inst.graph, &inst.requirement, cap)?)
    }
}

/// Comparable density of a result for an algorithm: multigraph algorithms
/// compare multigraph densities, everything else the simple density.
fn comparison_density(res: &SubgraphResult) -> Density {
    res.density
}

/// Independent feasibility check: recount the result's node set on the
/// instance graph (or its multigraph) and test the requirement.
fn revalidate(inst: &ColoredInstance, algo: Algorithm, res: &SubgraphResult) -> bool {
    let counts = if matches!(algo, Algorithm::ColApproxMulti)
        || (matches!(algo, Algorithm::Brute) && inst.multi)
    {
        inst.graph.to_multigraph().induced_stats(&res.nodes).1
    } else {
        inst.graph.induced_stats(&res.nodes).1
    };
    inst.requirement.satisfied_by(&counts)
}

/// Run every algorithm on every instance.
///
/// With the oracle on, each record carries its exact relative error; the
/// oracle for an instance is enumerated once and shared. Timing runs are
/// separate from the measured result so the records stay deterministic.
pub fn evaluate(
    instances: &[ColoredInstance],
    algorithms: &[Algorithm],
    opts: &EvalOptions,
) -> Result<(Vec<RunRecord>, Vec<TimingRecord>, Summary)> {
    let mut records = Vec::new();
    let mut timings = Vec::new();

    for inst in instances {
        let oracle = if opts.oracle {
            Some(oracle_result(inst, opts.oracle_cap)?)
        } else {
            None
        };
        for &algo in algorithms.iter() {
            let res = run_algorithm(inst, algo, opts.oracle_cap)?;
            let feasible = revalidate(inst, algo, &res);
            let d = comparison_density(&res);
            let (rel, optimal, within) = match &oracle {
                Some(opt) => {
                    let od = comparison_density(opt);
                    debug_assert!(d <= od, "approximation beat the oracle on {}", inst.id);
                    (
                        Some(d.relative_error_pct(od)),
                        Some(d == od),
                        Some(d.within_one_percent_of(od)),
                    )
                }
                None => (None, None, None),
            };
            records.push(RunRecord {
                instance: inst.id.clone(),
                algorithm: algo.name().to_string(),
                nodes: res.node_count() as u64,
                edges: res.edge_count,
                density_num: d.edges,
                density_den: d.nodes,
                density: d.as_f64(),
                feasible,
                rel_error_pct: rel,
                optimal,
                within_one_pct: within,
                peel_steps: None,
            });
            if opts.repeats > 0 {
                let mut times = Vec::with_capacity(opts.repeats as usize);
                for _ in 0..opts.repeats {
                    let t0 = Instant::now();
                    let _ = run_algorithm(inst, algo, opts.oracle_cap)?;
                    times.push(t0.elapsed().as_secs_f64() * 1e3);
                }
                let mean = times.iter().sum::<f64>() / times.len() as f64;
                let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>()
                    / times.len() as f64;
                timings.push(TimingRecord {
                    instance: inst.id.clone(),
                    algorithm: algo.name().to_string(),
                    repeats: opts.repeats,
                    mean_ms: mean,
                    std_ms: var.sqrt(),
                });
            }
        }
    }

    let summary = summarize(&records, algorithms);
    Ok((records, timings, summary))
}

fn summarize(records: &[RunRecord], algorithms: &[Algorithm]) -> Summary {
    let mut out = Summary::default();
    for algo in algorithms {
        let name = algo.name();
        let mut errors: Vec<f64> = Vec::new();
        let mut optimal = 0u64;
        let mut within = 0u64;
        let mut runs = 0u64;
        for r in records.iter().filter(|r| r.algorithm == name) {
            runs += 1;
            if let Some(e) = r.rel_error_pct {
                errors.push(e);
            }
            if r.optimal == Some(true) {
                optimal += 1;
            }
            if r.within_one_pct == Some(true) {
                within += 1;
            }
        }
        if runs == 0 {
            continue;
        }
        let with_oracle = errors.len().max(1) as f64;
        let mean = errors.iter().sum::<f64>() / with_oracle;
        let var = errors.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / with_oracle;
        let mut sorted = errors.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = if sorted.is_empty() {
            0.0
        } else if sorted.len() % 2 == 1 {
            sorted[sorted.len() / 2]
        } else {
            (sorted[sorted.len() / 2 - 1] + sorted[sorted.len() / 2]) / 2.0
        };
        let max = sorted.last().copied().unwrap_or(0.0);
        out.algorithms.push(AlgorithmSummary {
            algorithm: name.to_string(),
            runs,
            pct_optimal: 100.0 * optimal as f64 / runs as f64,
            pct_within_one: 100.0 * within as f64 / runs as f64,
            mean_error_pct: mean,
            std_error_pct: var.sqrt(),
            median_error_pct: median,
            max_error_pct: max,
        });
    }
    out
}
