use std::fmt;

/// Harness-level errors, wrapping the library errors plus IO and
/// configuration failures. `exit_code` maps them onto the CLI contract:
/// 2 infeasible, 3 parse error, 4 cap exceeded, 1 everything else.
#[derive(Debug)]
pub enum HarnessError {
    Core(colordense::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
    DegenerateInterval,
    NothingToSweep { w: u64, m: u64 },
    UnknownAlgorithm(String),
    UnknownColor(String),
    BadRequirement(String),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::Core(e) => write!(f, "{e}"),
            HarnessError::Io(e) => write!(f, "io error: {e}"),
            HarnessError::Json(e) => write!(f, "json error: {e}"),
            HarnessError::Csv(e) => write!(f, "csv error: {e}"),
            HarnessError::DegenerateInterval => {
                write!(f, "all colors have identical bounds; nothing to sample")
            }
            HarnessError::NothingToSweep { w, m } => write!(
                f,
                "unconstrained densest subgraph already has all {m} edges (w = {w}); nothing to sweep"
            ),
            HarnessError::UnknownAlgorithm(a) => write!(f, "unknown algorithm {a:?}"),
            HarnessError::UnknownColor(c) => write!(f, "unknown color label {c:?}"),
            HarnessError::BadRequirement(msg) => write!(f, "bad requirement: {msg}"),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<colordense::Error> for HarnessError {
    fn from(e: colordense::Error) -> Self {
        HarnessError::Core(e)
    }
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e)
    }
}

impl From<serde_json::Error> for HarnessError {
    fn from(e: serde_json::Error) -> Self {
        HarnessError::Json(e)
    }
}

impl From<csv::Error> for HarnessError {
    fn from(e: csv::Error) -> Self {
        HarnessError::Csv(e)
    }
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        use colordense::Error as E;
        match self {
            HarnessError::Core(E::Infeasible { .. }) | HarnessError::Core(E::NoFeasibleSubset) => 2,
            HarnessError::Core(E::Parse { .. })
            | HarnessError::Core(E::SelfLoop { .. })
            | HarnessError::Core(E::EmptyInput) => 3,
            HarnessError::Core(E::CapExceeded { .. }) => 4,
            HarnessError::UnknownColor(_) | HarnessError::BadRequirement(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
