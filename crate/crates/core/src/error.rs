use thiserror::Error;

/// Errors produced by graph construction, solvers, and oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop at line {line}: node {label:?} joined to itself")]
    SelfLoop { line: usize, label: String },

    #[error("empty input: no edges found")]
    EmptyInput,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("node index {index} out of range for graph with {n} nodes")]
    NodeOutOfRange { index: u32, n: usize },

    #[error("requirement has {got} entries but the graph has {expected} colors")]
    RequirementLength { expected: usize, got: usize },

    #[error("requirement mode {got:?} not supported here (expected {expected:?})")]
    ModeMismatch {
        expected: crate::requirement::RequirementMode,
        got: crate::requirement::RequirementMode,
    },

    #[error("infeasible instance: {detail}")]
    Infeasible { detail: String },

    #[error("no subset satisfies the requirement")]
    NoFeasibleSubset,

    #[error("edge {edge} carries multiple colors; use the multigraph solver")]
    MultiColoredEdge { edge: String },

    #[error("graph has {n} nodes, above the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("k = {k} outside the valid range [{lo}, {hi}]")]
    KOutOfRange { k: u64, lo: u64, hi: u64 },

    #[error("parameter {name} must be positive")]
    ZeroParameter { name: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
