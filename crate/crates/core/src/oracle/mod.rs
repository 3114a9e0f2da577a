//! Exact reference evaluators.
//!
//! Perfect matchings, matching sums and Holant values are computed by a
//! memoised sweep over the vertices in a low-width order: the state records
//! which vertices (or edge values) on the boundary between processed and
//! unprocessed vertices are already fixed.  Wide matching instances go
//! through greedy sparse tensor contraction instead.  Both are exact and sum
//! every term of the defining formula; the limits only bound how large the
//! intermediate state may grow.

mod contract;
mod holant;
mod matching;
mod order;
mod sat;

pub use holant::{gate_signature, holant};
pub use matching::{
    count_perfect_matchings, count_perfect_matchings_with, matchsum, matchsum_with, Method,
};
pub use order::{elimination_order, max_frontier, FrontierKind};
pub use sat::count_sat;

/// Resource limits for the oracles.  Exceeding any of them is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest boundary (open vertices or open edges) the sweep may carry.
    /// Any graph with at most this many vertices or edges fits.
    pub frontier: usize,
    /// Largest number of live states in the sweep.
    pub states: usize,
    /// Largest variable count for exhaustive model counting.
    pub sat_vars: usize,
    /// Largest gate arity for signature tabulation.
    pub arity: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            frontier: 24,
            states: 1 << 22,
            sat_vars: 24,
            arity: 20,
        }
    }
}

impl Limits {
    /// Same defaults with a different boundary cap.
    pub fn with_frontier(frontier: usize) -> Self {
        Self {
            frontier: frontier.min(63),
            ..Self::default()
        }
    }

    /// Generous limits for verifying large pipeline outputs.
    pub fn generous() -> Self {
        Self {
            frontier: 63,
            states: 1 << 24,
            sat_vars: 26,
            arity: 20,
        }
    }
}
