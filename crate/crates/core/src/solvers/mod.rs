//! Exact solvers for longest paths, longest cycles, maximum cliques and
//! their transversals.
//!
//! Conventions: a single vertex is a path of length 0, so `λ(K1) = 0`, and
//! `λ` of a disconnected graph is the maximum over its components.

use std::cell::Cell;

use serde::Serialize;
use thiserror::Error;

use crate::graph::GraphError;

pub(crate) mod bits;
pub mod block_dp;
pub mod clique;
pub mod cycles;
pub mod hitting;
pub mod paths;

pub use bits::MAX_SEARCH_VERTICES;
pub use block_dp::{lambda_via_blocks, BlockSolver, MAX_BLOCK_VERTICES};
pub use clique::{clique_singleton_transversal, omega_exact};
pub use cycles::{enumerate_longest_cycles, gamma_exact, gamma_via_quotient, lct_exact, WeightedGraph};
pub use hitting::min_hitting_set;
pub use paths::{enumerate_longest_paths, gallai_vertices, lambda_exact, lpt_exact};

/// Default node limit per search when neither a flag nor `GALLAI_BUDGET`
/// is given.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("node budget of {limit} exhausted{}", best.map(|b| format!(" (best lower bound {b})")).unwrap_or_default())]
    BudgetExceeded { limit: u64, best: Option<usize> },
    #[error("graph has {0} vertices; the search kernels accept at most {MAX_SEARCH_VERTICES}")]
    GraphTooLarge(usize),
    #[error("a block has {size} vertices; the block solver accepts at most {limit}")]
    BlockTooLarge { size: usize, limit: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph has no cycle")]
    Acyclic,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Deterministic search-node limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    node_limit: u64,
}

impl Budget {
    /// # Panics
    /// If `node_limit` is zero.
    pub fn new(node_limit: u64) -> Self {
        assert!(node_limit > 0, "node limit must be positive");
        Self { node_limit }
    }

    pub fn node_limit(&self) -> u64 {
        self.node_limit
    }

    /// `GALLAI_BUDGET` if set to a positive integer, else the default.
    pub fn from_env() -> Self {
        std::env::var("GALLAI_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&n| n > 0)
            .map_or_else(Self::default, Self::new)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_LIMIT)
    }
}

/// Counts search nodes against a [`Budget`].
#[derive(Debug)]
pub(crate) struct Meter {
    limit: u64,
    used: Cell<u64>,
}

impl Meter {
    pub fn new(b: Budget) -> Self {
        Self { limit: b.node_limit, used: Cell::new(0) }
    }

    /// Records one node; `false` once the limit is passed.
    #[inline]
    pub fn tick(&self) -> bool {
        let u = self.used.get() + 1;
        self.used.set(u);
        u <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn exceeded(&self, best: Option<usize>) -> SolveError {
        SolveError::BudgetExceeded { limit: self.limit, best }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Lambda,
    Gamma,
    Omega,
}

/// An optimum value with extremal witnesses.
///
/// Paths are stored with the smaller endpoint first, cycles rotated to
/// start at their minimum vertex and oriented so the second vertex is
/// smaller than the last, cliques as sorted sets. `exhausted` means the
/// witnesses are the complete family of optimal objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub measure: Measure,
    pub value: usize,
    pub witnesses: Vec<Vec<usize>>,
    pub exhausted: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalResult {
    pub size: usize,
    pub witness: Vec<usize>,
    /// Vertex sets of the extremal family the witness was checked against.
    pub certificate: Vec<Vec<usize>>,
}

pub(crate) fn check_size(n: usize) -> Result<(), SolveError> {
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > MAX_SEARCH_VERTICES {
        return Err(SolveError::GraphTooLarge(n));
    }
    Ok(())
}

/// Distinct sorted vertex sets of the given sequences.
pub(crate) fn vertex_sets(seqs: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = seqs
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

pub(crate) fn transversal(sets: Vec<Vec<usize>>, meter: &Meter) -> Result<TransversalResult, SolveError> {
    let witness = hitting::min_hitting_set_metered(&sets, meter)?;
    Ok(TransversalResult { size: witness.len(), witness, certificate: sets })
}
