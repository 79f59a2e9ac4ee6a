//! Integer-program export for out-of-band exact solving.
//!
//! One model per guessed node count k: maximize the sum of edge indicators
//! divided by k, subject to the cardinality row, the edge-count row, the
//! x <= y couplings, and one per-color row in the colored variant. The x
//! variables are relaxed to [0, 1]; the y variables stay binary. Models
//! serialize to LP text that this module's own parser reads back.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::EdgeColoredGraph;
use crate::peel::lower_bound_nodes;

/// Requirement carried into the export: a total edge count or a per-color
/// vector.
#[derive(Debug, Clone)]
pub enum IlpRequest {
    TotalEdges(u64),
    PerColor(Vec<u64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSense {
    Ge,
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IlpRow {
    pub name: String,
    /// Integer coefficients on named variables.
    pub terms: Vec<(i64, String)>,
    pub sense: RowSense,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IlpBound {
    pub var: String,
    pub lo: i64,
    pub hi: i64,
}

/// One exported model instance for a fixed k.
///
/// Objective coefficients are the decimal rendering of 1/k truncated to 15
/// fractional digits (exact whenever k divides a power of ten), stored as
/// canonical strings so text round-trips are structural identities.
#[derive(Debug, Clone, PartialEq)]
pub struct IlpModel {
    pub name: String,
    pub k: u64,
    /// `(coefficient, x variable)` pairs in edge order.
    pub objective: Vec<(String, String)>,
    pub constraints: Vec<IlpRow>,
    pub bounds: Vec<IlpBound>,
    pub binaries: Vec<String>,
}

/// Decimal rendering of 1/k, truncated to 15 fractional digits with
/// trailing zeros trimmed.
fn inverse_decimal(k: u64) -> String {
    if k == 1 {
        return "1".to_string();
    }
    const SCALE: u128 = 1_000_000_000_000_000; // 10^15
    let q = SCALE / k as u128;
    let mut frac = format!("{q:015}");
    while frac.ends_with('0') {
        frac.pop();
    }
    if frac.is_empty() {
        frac.push('0');
    }
    format!("0.{frac}")
}

fn x_var(g: &EdgeColoredGraph, e: u32) -> String {
    let (u, v) = g.edge_ends(e);
    let (a, b) = (g.node_label(u), g.node_label(v));
    if a <= b {
        format!("x_{a}_{b}")
    } else {
        format!("x_{b}_{a}")
    }
}

fn y_var(g: &EdgeColoredGraph, v: u32) -> String {
    format!("y_{}", g.node_label(v))
}

/// Valid k range for a request on `g`: the node lower bound for the implied
/// edge demand up to n.
pub fn ilp_k_range(g: &EdgeColoredGraph, request: &IlpRequest) -> Result<(u64, u64)> {
    let h_eff = match request {
        IlpRequest::TotalEdges(h) => *h,
        // Any feasible subgraph needs at least max_c h_c distinct edges.
        IlpRequest::PerColor(h) => h.iter().copied().max().unwrap_or(0),
    };
    let lo = if h_eff == 0 {
        1
    } else {
        lower_bound_nodes(h_eff, 1)?
    };
    Ok((lo, g.n() as u64))
}

/// Build the model for one guessed node count `k`.
pub fn export_ilp(
    g: &EdgeColoredGraph,
    request: &IlpRequest,
    k: u64,
    name: &str,
) -> Result<IlpModel> {
    if let IlpRequest::PerColor(h) = request {
        if h.len() != g.colors() {
            return Err(Error::RequirementLength {
                expected: g.colors(),
                got: h.len(),
            });
        }
    }
    let (lo, hi) = ilp_k_range(g, request)?;
    if k < lo || k > hi {
        return Err(Error::KOutOfRange { k, lo, hi });
    }

    let coeff = inverse_decimal(k);
    let objective: Vec<(String, String)> = (0..g.m() as u32)
        .map(|e| (coeff.clone(), x_var(g, e)))
        .collect();

    let h_row = match request {
        IlpRequest::TotalEdges(h) => *h,
        IlpRequest::PerColor(h) => h.iter().copied().max().unwrap_or(0),
    };

    let mut constraints = Vec::new();
    constraints.push(IlpRow {
        name: "edge_count".to_string(),
        terms: (0..g.m() as u32).map(|e| (1, x_var(g, e))).collect(),
        sense: RowSense::Ge,
        rhs: h_row as i64,
    });
    constraints.push(IlpRow {
        name: "cardinality".to_string(),
        terms: (0..g.n() as u32).map(|v| (1, y_var(g, v))).collect(),
        sense: RowSense::Eq,
        rhs: k as i64,
    });
    for e in 0..g.m() as u32 {
        let (u, v) = g.edge_ends(e);
        let x = x_var(g, e);
        for (tag, node) in [("u", u), ("v", v)] {
            constraints.push(IlpRow {
                name: format!("cpl_{e}_{tag}"),
                terms: vec![(1, x.clone()), (-1, y_var(g, node))],
                sense: RowSense::Le,
                rhs: 0,
            });
        }
    }
    if let IlpRequest::PerColor(h) = request {
        for c in 0..g.colors() as u32 {
            let terms: Vec<(i64, String)> = (0..g.m() as u32)
                .filter(|&e| g.edge_color_ids(e).contains(&c))
                .map(|e| (1, x_var(g, e)))
                .collect();
            constraints.push(IlpRow {
                name: format!("color_{}", g.color_label(c)),
                terms,
                sense: RowSense::Ge,
                rhs: h[c as usize] as i64,
            });
        }
    }

    let bounds = (0..g.m() as u32)
        .map(|e| IlpBound {
            var: x_var(g, e),
            lo: 0,
            hi: 1,
        })
        .collect();
    let binaries = (0..g.n() as u32).map(|v| y_var(g, v)).collect();

    Ok(IlpModel {
        name: name.to_string(),
        k,
        objective,
        constraints,
        bounds,
        binaries,
    })
}

fn write_terms(out: &mut String, terms: &[(i64, String)]) {
    for (i, (coeff, var)) in terms.iter().enumerate() {
        if i == 0 {
            match coeff {
                1 => {}
                -1 => out.push_str("- "),
                c => {
                    let _ = write!(out, "{c} ");
                }
            }
        } else if *coeff >= 0 {
            let _ = write!(out, " + ");
            if *coeff != 1 {
                let _ = write!(out, "{coeff} ");
            }
        } else {
            let _ = write!(out, " - ");
            if *coeff != -1 {
                let _ = write!(out, "{} ", -coeff);
            }
        }
        out.push_str(var);
    }
}

impl IlpModel {
    /// Render as LP text. Rows stay on single lines; identifiers are written
    /// verbatim (labels are assumed LP-safe, see the file-format docs).
    pub fn to_lp_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "\\ model {} k {}", self.name, self.k);
        out.push_str("Maximize\n obj:");
        for (coeff, var) in &self.objective {
            let _ = write!(out, " + {coeff} {var}");
        }
        out.push('\n');
        out.push_str("Subject To\n");
        for row in &self.constraints {
            let _ = write!(out, " {}: ", row.name);
            write_terms(&mut out, &row.terms);
            let op = match row.sense {
                RowSense::Ge => ">=",
                RowSense::Le => "<=",
                RowSense::Eq => "=",
            };
            let _ = writeln!(out, " {op} {}", row.rhs);
        }
        out.push_str("Bounds\n");
        for b in &self.bounds {
            let _ = writeln!(out, " {} <= {} <= {}", b.lo, b.var, b.hi);
        }
        out.push_str("Binaries\n ");
        out.push_str(&self.binaries.join(" "));
        out.push_str("\nEnd\n");
        out
    }
}

/// Parse LP text produced by [`IlpModel::to_lp_string`].
pub fn parse_lp(text: &str) -> Result<IlpModel> {
    let mut name = String::new();
    let mut k = 0u64;
    let mut objective = Vec::new();
    let mut constraints = Vec::new();
    let mut bounds = Vec::new();
    let mut binaries = Vec::new();

    #[derive(PartialEq)]
    enum Section {
        Preamble,
        Objective,
        Rows,
        Bounds,
        Binaries,
    }
    let mut section = Section::Preamble;
    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('\\') {
            let toks: Vec<&str> = comment.split_whitespace().collect();
            if toks.len() == 4 && toks[0] == "model" && toks[2] == "k" {
                name = toks[1].to_string();
                k = toks[3]
                    .parse()
                    .map_err(|_| err(line_no, "bad k in model header"))?;
            }
            continue;
        }
        match line {
            "Maximize" => {
                section = Section::Objective;
                continue;
            }
            "Subject To" => {
                section = Section::Rows;
                continue;
            }
            "Bounds" => {
                section = Section::Bounds;
                continue;
            }
            "Binaries" => {
                section = Section::Binaries;
                continue;
            }
            "End" => break,
            _ => {}
        }
        match section {
            Section::Preamble => return Err(err(line_no, "content before Maximize")),
            Section::Objective => {
                let body = line
                    .strip_prefix("obj:")
                    .ok_or_else(|| err(line_no, "objective must start with 'obj:'"))?;
                let toks: Vec<&str> = body.split_whitespace().collect();
                let mut i = 0;
                while i < toks.len() {
                    if toks[i] != "+" {
                        return Err(err(line_no, "objective terms must be '+ coeff var'"));
                    }
                    if i + 2 >= toks.len() {
                        return Err(err(line_no, "truncated objective term"));
                    }
                    objective.push((toks[i + 1].to_string(), toks[i + 2].to_string()));
                    i += 3;
                }
            }
            Section::Rows => {
                let (row_name, rest) = line
                    .split_once(':')
                    .ok_or_else(|| err(line_no, "constraint missing name"))?;
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let op_pos = toks
                    .iter()
                    .position(|t| matches!(*t, ">=" | "<=" | "="))
                    .ok_or_else(|| err(line_no, "constraint missing comparison"))?;
                let sense = match toks[op_pos] {
                    ">=" => RowSense::Ge,
                    "<=" => RowSense::Le,
                    _ => RowSense::Eq,
                };
                let rhs: i64 = toks
                    .get(op_pos + 1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line_no, "bad right-hand side"))?;
                let mut terms = Vec::new();
                let mut sign = 1i64;
                let mut coeff: Option<i64> = None;
                for t in &toks[..op_pos] {
                    match *t {
                        "+" => sign = 1,
                        "-" => sign = -1,
                        tok => {
                            if let Ok(c) = tok.parse::<i64>() {
                                coeff = Some(c);
                            } else {
                                terms.push((sign * coeff.take().unwrap_or(1), tok.to_string()));
                                sign = 1;
                            }
                        }
                    }
                }
                constraints.push(IlpRow {
                    name: row_name.trim().to_string(),
                    terms,
                    sense,
                    rhs,
                });
            }
            Section::Bounds => {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 5 || toks[1] != "<=" || toks[3] != "<=" {
                    return Err(err(line_no, "bounds must read 'lo <= var <= hi'"));
                }
                bounds.push(IlpBound {
                    var: toks[2].to_string(),
                    lo: toks[0].parse().map_err(|_| err(line_no, "bad bound"))?,
                    hi: toks[4].parse().map_err(|_| err(line_no, "bad bound"))?,
                });
            }
            Section::Binaries => {
                binaries.extend(line.split_whitespace().map(|s| s.to_string()));
            }
        }
    }

    Ok(IlpModel {
        name,
        k,
        objective,
        constraints,
        bounds,
        binaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> EdgeColoredGraph {
        EdgeColoredGraph::from_edge_list("a b 1\na c 1\nb c 2").unwrap()
    }

    #[test]
    fn triangle_model_has_expected_shape() {
        let g = triangle();
        let model = export_ilp(&g, &IlpRequest::TotalEdges(2), 3, "tri").unwrap();
        assert_eq!(model.objective.len(), 3);
        assert_eq!(model.binaries.len(), 3);
        assert_eq!(model.constraints.len(), 8); // edge_count + cardinality + 6 couplings
        assert_eq!(model.bounds.len(), 3);
        assert!(model
            .constraints
            .iter()
            .any(|r| r.name == "edge_count" && r.sense == RowSense::Ge && r.rhs == 2));
        assert!(model
            .constraints
            .iter()
            .any(|r| r.name == "cardinality" && r.sense == RowSense::Eq && r.rhs == 3));
    }

    #[test]
    fn colored_variant_adds_one_row_per_color() {
        let g = triangle();
        let base = export_ilp(&g, &IlpRequest::TotalEdges(1), 3, "tri").unwrap();
        let colored = export_ilp(&g, &IlpRequest::PerColor(vec![1, 1]), 3, "tri").unwrap();
        assert_eq!(colored.constraints.len(), base.constraints.len() + 2);
        let row = colored
            .constraints
            .iter()
            .find(|r| r.name == "color_2")
            .unwrap();
        assert_eq!(row.terms.len(), 1);
        assert_eq!(row.rhs, 1);
    }

    #[test]
    fn k_out_of_range_is_rejected() {
        let g = triangle();
        // Two edges need at least ell(2,1) = 3 nodes... actually 2 edges fit
        // on 3 nodes; ell(2,1) = 3.
        assert!(matches!(
            export_ilp(&g, &IlpRequest::TotalEdges(2), 2, "tri"),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            export_ilp(&g, &IlpRequest::TotalEdges(2), 4, "tri"),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn variable_names_order_endpoints_by_label() {
        let g = EdgeColoredGraph::from_edge_list("zeta alpha 1").unwrap();
        let model = export_ilp(&g, &IlpRequest::TotalEdges(1), 2, "t").unwrap();
        assert_eq!(model.objective[0].1, "x_alpha_zeta");
    }

    #[test]
    fn text_round_trips_through_own_parser() {
        let g = triangle();
        for (req, k) in [
            (IlpRequest::TotalEdges(2), 3),
            (IlpRequest::PerColor(vec![1, 1]), 3),
        ] {
            let model = export_ilp(&g, &req, k, "tri").unwrap();
            let text = model.to_lp_string();
            let parsed = parse_lp(&text).unwrap();
            assert_eq!(parsed, model);
        }
    }

    #[test]
    fn objective_coefficient_is_truncated_decimal() {
        assert_eq!(inverse_decimal(1), "1");
        assert_eq!(inverse_decimal(2), "0.5");
        assert_eq!(inverse_decimal(3), "0.333333333333333");
        assert_eq!(inverse_decimal(4), "0.25");
        assert_eq!(inverse_decimal(10), "0.1");
    }
}
