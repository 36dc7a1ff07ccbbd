//! Factorization engine: length sets, factorization enumeration, and the
//! distance geometry on factorizations.
//!
//! Length questions are answered by dynamic programming over bit sets of
//! achievable lengths, never by enumerating factorizations; enumeration is
//! reserved for the operations that genuinely need the vectors (graphs,
//! catenary and tame degrees, Betti elements).

pub mod bitset;
mod enumerate;
mod graph;
mod lengths;

pub use bitset::LengthBits;
pub use enumerate::{factorizations, word_closure};
pub(crate) use enumerate::{factorizations_budgeted, word_closure_inner};
pub use graph::{catenary_degree_of_set, graph_components, GraphPartition};
pub use lengths::{
    length_set, line_length_table, numerical_length_set, puiseux_length_set,
    vector_length_set, vector_representable, LineProblem,
};

use crate::error::Error;
use crate::monoid::Element;
use crate::Result;

/// Default work budget for enumeration and scans, counted in search-tree
/// node expansions (and table cells for the dynamic programs).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A factorization is an exponent vector over the atoms of the monoid, in
/// canonical atom order.
pub type Factorization = Vec<u64>;

/// Number of atoms counted with multiplicity.
pub fn factorization_length(z: &[u64]) -> u64 {
    z.iter().sum()
}

/// Componentwise minimum, the common part of two factorizations.
pub fn factorization_gcd(z: &[u64], y: &[u64]) -> Factorization {
    z.iter().zip(y).map(|(&a, &b)| a.min(b)).collect()
}

/// Distance between two factorizations of the same element: remove the
/// common part and take the larger remaining length.
pub fn distance(z: &[u64], y: &[u64]) -> u64 {
    let mut excess_z = 0u64;
    let mut excess_y = 0u64;
    for (&a, &b) in z.iter().zip(y) {
        let g = a.min(b);
        excess_z += a - g;
        excess_y += b - g;
    }
    excess_z.max(excess_y)
}

/// The set of factorizations of one element, lexicographically sorted.
///
/// `complete` is false when the work budget ran out before the search
/// finished; downstream graph operations refuse incomplete sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSet {
    pub element: Element,
    pub factorizations: Vec<Factorization>,
    pub complete: bool,
}

impl FactorizationSet {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    pub fn lengths(&self) -> Option<LengthSet> {
        if self.factorizations.is_empty() {
            return None;
        }
        let mut ls: Vec<u64> = self
            .factorizations
            .iter()
            .map(|z| factorization_length(z))
            .collect();
        ls.sort_unstable();
        ls.dedup();
        Some(LengthSet::from_sorted(ls))
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::IncompleteSet)
        }
    }
}

/// A nonempty, strictly increasing set of factorization lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSet {
    values: Vec<u64>,
}

impl LengthSet {
    /// Wraps a strictly increasing, nonempty list.
    pub fn from_sorted(values: Vec<u64>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        LengthSet { values }
    }

    /// Reads a DP row: recorded bits, each offset by `base`.
    pub fn from_bits(base: u64, bits: &LengthBits) -> Option<Self> {
        let values: Vec<u64> = bits.iter_ones().map(|b| base + b as u64).collect();
        if values.is_empty() {
            None
        } else {
            Some(LengthSet { values })
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn min(&self) -> u64 {
        self.values[0]
    }

    pub fn max(&self) -> u64 {
        *self.values.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: u64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    /// Distinct gaps between consecutive lengths, sorted ascending. Empty
    /// exactly for singleton length sets.
    pub fn delta(&self) -> Vec<u64> {
        let mut gaps: Vec<u64> = self.values.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.sort_unstable();
        gaps.dedup();
        gaps
    }

    pub fn is_interval(&self) -> bool {
        self.max() - self.min() + 1 == self.values.len() as u64
    }

    /// Minkowski sum of two length sets.
    pub fn set_sum(&self, other: &LengthSet) -> LengthSet {
        let mut out: Vec<u64> = Vec::with_capacity(self.values.len() * other.values.len());
        for &a in &self.values {
            for &b in &other.values {
                out.push(a + b);
            }
        }
        out.sort_unstable();
        out.dedup();
        LengthSet { values: out }
    }
}

/// Work counter shared by the searches. `try_charge` returns false once
/// the budget is spent; scans convert that into a hard error while
/// factorization enumeration downgrades its result to incomplete.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    pub fn try_charge(&mut self, amount: u64) -> bool {
        self.used = self.used.saturating_add(amount);
        self.used <= self.limit
    }

    pub fn exceeded(&self) -> Error {
        Error::BudgetExceeded(self.limit)
    }
}
