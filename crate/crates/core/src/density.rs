//! Exact rational densities.
//!
//! A density is the pair (induced edge count, subset size). All comparisons
//! cross-multiply in 128-bit integers; floating point appears only in
//! rendering.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Density of a node subset: `edges / nodes`, kept as an exact pair.
///
/// The empty subset has density 0 with the denominator clamped to 1 so that
/// every value participates in a total order.
#[derive(Debug, Clone, Copy)]
pub struct Density {
    pub edges: u64,
    pub nodes: u64,
}

impl Density {
    pub fn new(edges: u64, subset_size: usize) -> Self {
        Density {
            edges,
            nodes: (subset_size as u64).max(1),
        }
    }

    pub const ZERO: Density = Density { edges: 0, nodes: 1 };

    pub fn as_f64(&self) -> f64 {
        self.edges as f64 / self.nodes as f64
    }

    /// Value rounded half-up to one decimal, times ten (6.25 -> 63).
    pub fn rounded_tenths(&self) -> u64 {
        let num = 20u128 * self.edges as u128 + self.nodes as u128;
        (num / (2 * self.nodes as u128)) as u64
    }

    /// Exact test of `self >= other / 2`.
    pub fn at_least_half_of(&self, other: Density) -> bool {
        2 * self.edges as u128 * other.nodes as u128 >= other.edges as u128 * self.nodes as u128
    }

    /// Exact test of `(other - self) / other <= 1/100`, i.e. within one
    /// percent below `other`. Values above `other` trivially qualify.
    pub fn within_one_percent_of(&self, other: Density) -> bool {
        if *self >= other {
            return true;
        }
        let gap = other.edges as u128 * self.nodes as u128 - self.edges as u128 * other.nodes as u128;
        100 * gap <= other.edges as u128 * self.nodes as u128
    }

    /// Relative error `(opt - self) / opt` in percent, as a float for
    /// reporting. Negative differences clamp to zero.
    pub fn relative_error_pct(&self, opt: Density) -> f64 {
        if *self >= opt || opt.edges == 0 {
            return 0.0;
        }
        (opt.as_f64() - self.as_f64()) / opt.as_f64() * 100.0
    }
}

impl PartialEq for Density {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Density {}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.edges as u128 * other.nodes as u128;
        let rhs = other.edges as u128 * self.nodes as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.edges, self.nodes)
    }
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Density", 3)?;
        s.serialize_field("edges", &self.edges)?;
        s.serialize_field("nodes", &self.nodes)?;
        s.serialize_field("value", &self.as_f64())?;
        s.end()
    }
}
