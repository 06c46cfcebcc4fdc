//! Gadgets and reduction instances.
//!
//! A [`Gadget`] is a graph with an entry vertex `v` and an exit vertex `w`
//! such that every longest path runs from `v` to `w`. Gadgets carry a
//! certificate computed by the exact solvers; composition functions refuse
//! gadgets without one.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cnf::{CnfError, SatParityInstance};
use crate::graph::{Graph, GraphError};
use crate::solvers::{gallai_vertices, enumerate_longest_paths, BlockSolver, Budget, SolveError};

pub mod bundle;
pub mod clique;
pub mod hampath;
pub mod instances;
pub mod path_gadget;
pub mod wz;

pub use bundle::{formulas_checksum, sha256_hex, write_bundle, Manifest};
pub use clique::{build_clique_gadget, build_clique_parity_instance, reduce_3sat_to_clique, CliqueGadget};
pub use hampath::{hampath_vertex_count, reduce_3sat_to_hampath, HamPathReduction};
pub use instances::{build_lct_instance, build_lpt_instance, build_theta2_instance};
pub use path_gadget::{build_odd_even, build_path_gadget, concatenate, pad_gadget, parity_lambdas, OddEven};
pub use wz::{build_wz, build_wz_core, build_wz_paths, WZ_GOLDEN, WZ_GOLDEN_SHA256};

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("reduction output has {0} vertices; at least 3 are needed")]
    GadgetTooSmall(usize),
    #[error("target {target} is below the gadget class {class}")]
    TargetTooSmall { target: usize, class: usize },
    #[error("gadget has no certificate")]
    Uncertified,
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("vertex {0} is not an endpoint of any longest path of the host")]
    AnchorNotLongestPathEndpoint(usize),
    #[error("edge ({0}, {1}) lies on no longest cycle of the host")]
    AnchorNotOnLongestCycle(usize, usize),
}

/// Solver-computed facts about a gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GadgetCert {
    /// `λ` of the gadget graph.
    pub lambda: usize,
    /// Every longest path has endpoints `{v, w}`.
    pub endpoints: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    graph: Graph,
    v: usize,
    w: usize,
    class_k: usize,
    cert: Option<GadgetCert>,
}

impl Gadget {
    /// An uncertified gadget. `class_k` is the longest-path length the
    /// gadget has when its formula is satisfiable.
    pub fn new(graph: Graph, v: usize, w: usize, class_k: usize) -> Result<Self, GadgetError> {
        for x in [v, w] {
            if x >= graph.n() {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: graph.n() }.into());
            }
        }
        if v == w {
            return Err(GraphError::IdentifySame(v).into());
        }
        let graph = graph.with_role("v", v)?.with_role("w", w)?;
        Ok(Self { graph, v, w, class_k, cert: None })
    }

    /// The path `0 - 1 - ... - len` with `v = 0`, `w = len`, uncertified.
    pub fn plain_path(len: usize) -> Result<Self, GadgetError> {
        if len == 0 {
            return Err(GraphError::ZeroLength.into());
        }
        Self::new(Graph::path(len + 1), 0, len, len)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn class_k(&self) -> usize {
        self.class_k
    }

    pub fn cert(&self) -> Option<GadgetCert> {
        self.cert
    }

    pub fn lambda_cert(&self) -> Option<usize> {
        self.cert.map(|c| c.lambda)
    }

    pub fn endpoints_cert(&self) -> bool {
        self.cert.is_some_and(|c| c.endpoints)
    }

    /// The certificate, if it shows the endpoint property; composition
    /// goes through here.
    pub fn require_certified(&self) -> Result<GadgetCert, GadgetError> {
        match self.cert {
            Some(c) if c.endpoints => Ok(c),
            Some(_) => Err(GadgetError::CertificationFailed("longest paths do not all run from v to w".into())),
            None => Err(GadgetError::Uncertified),
        }
    }

    /// Certifies by enumerating every longest path.
    pub fn certify_by_enumeration(mut self, budget: Budget) -> Result<Self, GadgetError> {
        let all = enumerate_longest_paths(&self.graph, budget)?;
        let (a, b) = (self.v.min(self.w), self.v.max(self.w));
        let endpoints = all.witnesses.iter().all(|p| p[0] == a && p[p.len() - 1] == b);
        self.cert = Some(GadgetCert { lambda: all.value, endpoints });
        Ok(self)
    }

    /// Certifies through the block solver. When `v` and `w` both have
    /// degree 1, every longest path has endpoints `{v, w}` exactly when
    /// deleting either of them shortens the longest path.
    pub fn certify_by_blocks(mut self, solver: &mut BlockSolver) -> Result<Self, GadgetError> {
        let lambda = solver.lambda(&self.graph)?.value;
        let tips = self.graph.degree(self.v) == 1 && self.graph.degree(self.w) == 1;
        let mut endpoints = tips;
        if tips {
            for x in [self.v, self.w] {
                let (h, _) = self.graph.remove_vertex(x);
                endpoints &= solver.lambda(&h)?.value < lambda;
            }
        }
        self.cert = Some(GadgetCert { lambda, endpoints });
        Ok(self)
    }

    /// Certifies with the naive solvers: `λ` by search, endpoints through
    /// the Gallai set (valid because `v` and `w` are tips).
    pub fn certify_by_gallai(mut self, budget: Budget) -> Result<Self, GadgetError> {
        let gallai = gallai_vertices(&self.graph, budget)?;
        let lambda = crate::solvers::lambda_exact(&self.graph, budget)?.value;
        let endpoints = self.graph.degree(self.v) == 1
            && self.graph.degree(self.w) == 1
            && gallai.contains(&self.v)
            && gallai.contains(&self.w);
        self.cert = Some(GadgetCert { lambda, endpoints });
        Ok(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Gallai,
    Lpt,
    Lct,
    Clique,
}

/// What the construction predicts from the split index alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    /// Gallai vertex exists / transversal number is 1 / a vertex lies in
    /// every maximum clique.
    pub yes: bool,
    pub summary: String,
    /// Predicted values such as `lambda`, `gamma`, `omega_odd`.
    pub values: BTreeMap<String, usize>,
}

/// A built reduction: the graph plus everything needed to check it.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub kind: InstanceKind,
    pub parity: SatParityInstance,
    pub predicted: Prediction,
    /// Solver-certified quantities of the building blocks.
    pub certificates: BTreeMap<String, usize>,
    /// Host graph for the transversal constructions.
    pub host: Option<Graph>,
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
