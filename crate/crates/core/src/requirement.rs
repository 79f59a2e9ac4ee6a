//! Per-color edge requirements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a requirement vector constrains per-color edge counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RequirementMode {
    AtLeast,
    AtMost,
    Exactly,
}

/// A vector of per-color edge-count requirements.
///
/// Entry `i` constrains the number of induced edges carrying color `i`.
/// Zero entries mean "unconstrained" in `AtLeast` mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorRequirement {
    pub h: Vec<u64>,
    pub mode: RequirementMode,
}

impl ColorRequirement {
    pub fn at_least(h: Vec<u64>) -> Self {
        ColorRequirement {
            h,
            mode: RequirementMode::AtLeast,
        }
    }

    pub fn at_most(h: Vec<u64>) -> Self {
        ColorRequirement {
            h,
            mode: RequirementMode::AtMost,
        }
    }

    pub fn exactly(h: Vec<u64>) -> Self {
        ColorRequirement {
            h,
            mode: RequirementMode::Exactly,
        }
    }

    /// Sum of all entries; the edge threshold used by the colored solvers.
    pub fn total(&self) -> u64 {
        self.h.iter().sum()
    }

    pub fn validate_len(&self, colors: usize) -> Result<()> {
        if self.h.len() != colors {
            return Err(Error::RequirementLength {
                expected: colors,
                got: self.h.len(),
            });
        }
        Ok(())
    }

    pub fn expect_mode(&self, expected: RequirementMode) -> Result<()> {
        if self.mode != expected {
            return Err(Error::ModeMismatch {
                expected,
                got: self.mode,
            });
        }
        Ok(())
    }

    /// Whether `counts` satisfies this requirement componentwise.
    pub fn satisfied_by(&self, counts: &[u64]) -> bool {
        debug_assert_eq!(counts.len(), self.h.len());
        match self.mode {
            RequirementMode::AtLeast => counts.iter().zip(&self.h).all(|(c, h)| c >= h),
            RequirementMode::AtMost => counts.iter().zip(&self.h).all(|(c, h)| c <= h),
            RequirementMode::Exactly => counts.iter().zip(&self.h).all(|(c, h)| c == h),
        }
    }
}

/// Outcome of the whole-graph feasibility check.
///
/// `slack[i]` is `count_i - h_i`; negative entries mark missing colors in
/// `AtLeast`/`Exactly` mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub slack: Vec<i64>,
}
