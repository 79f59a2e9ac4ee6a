//! Ground-truth machinery: the max-flow exact solver for the unconstrained
//! problem, brute-force enumeration for every constrained variant on small
//! instances, and LP-format model export for out-of-band exact solving.

pub mod brute;
pub mod flow;
pub mod ilp;

pub use brute::{
    brute_force_at_least_h_edges, brute_force_colored, brute_force_densest, DEFAULT_ENUM_CAP,
};
pub use flow::{build_flow_network, exact_dsp_flow, exact_dsp_flow_with_stats, FlowNetwork};
pub use ilp::{export_ilp, ilp_k_range, parse_lp, IlpModel, IlpRequest};
