//! Gadget constructions and exact solvers for longest path, longest cycle
//! and maximum clique transversal problems.
//!
//! The crate builds the graphs used in hardness reductions from SAT-Parity
//! (a sequence of 3-CNF formulas whose satisfiable ones form a prefix) to
//! Gallai-vertex existence, longest path/cycle transversal size and
//! singleton maximum-clique transversal, and verifies their behavior with
//! exact solvers on small instances.

pub mod blocks;
pub mod cnf;
pub mod graph;
pub mod gadgets;
pub mod generate;
pub mod oracle;
pub mod solvers;

pub use blocks::{block_cut_tree, BlockCutTree};
pub use cnf::{brute_force_sat, make_formula, make_parity_instance, parse_dimacs, CnfError, CnfFormula, FormulaKind, SatParityInstance};
pub use gadgets::{Gadget, GadgetError, ReductionInstance};
pub use graph::{Graph, GraphError};
pub use oracle::{theta2_decide_clique_singleton, theta2_decide_gallai, Method, OracleTranscript, QueryKind};
pub use solvers::{Budget, SolveError, SolveResult, TransversalResult};
