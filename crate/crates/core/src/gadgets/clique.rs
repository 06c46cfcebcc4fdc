//! Clique constructions: the 3-SAT to clique reduction, clique gadgets
//! with a universal set, and the parity instance built from joins.

use std::collections::BTreeMap;

use crate::cnf::{CnfError, CnfFormula, SatParityInstance, MAX_BRUTE_FORCE_VARS};
use crate::graph::{disjoint_union, join, Graph};
use crate::solvers::omega_exact;

use super::path_gadget::parity_lambdas;
use super::{yes_no, GadgetError, InstanceKind, Prediction, ReductionInstance};

/// One vertex per (clause, slot); two vertices are adjacent when they sit
/// in different clauses and their literals do not contradict. Returns the
/// graph and the clause count `k`; `ω = k` exactly when `f` is satisfiable.
pub fn reduce_3sat_to_clique(f: &CnfFormula) -> Result<(Graph, usize), GadgetError> {
    if f.num_vars() > MAX_BRUTE_FORCE_VARS {
        return Err(CnfError::TooManyVariables(f.num_vars()).into());
    }
    let lits: Vec<(usize, i32)> =
        f.clauses().iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&l| (j, l))).collect();
    let mut edges = Vec::new();
    for (a, &(ja, la)) in lits.iter().enumerate() {
        for (b, &(jb, lb)) in lits.iter().enumerate().skip(a + 1) {
            if ja != jb && la != -lb {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edge_list(lits.len(), &edges, std::iter::empty::<(String, usize)>())?;
    Ok((g, f.clauses().len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGadget {
    graph: Graph,
    omega_cert: usize,
    universal_set: Vec<usize>,
    target: usize,
}

impl CliqueGadget {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Certified `ω`.
    pub fn omega_cert(&self) -> usize {
        self.omega_cert
    }

    /// The vertices `W` adjacent to everything else; they lie in every
    /// maximum clique.
    pub fn universal_set(&self) -> &[usize] {
        &self.universal_set
    }

    pub fn target(&self) -> usize {
        self.target
    }
}

/// `H(f) ⊔ K_{k-1}` plus `target - k` universal vertices (roles `W0`,
/// `W1`, ...). `ω` is `target` if `f` is satisfiable and `target - 1`
/// otherwise; both facts and the universal set's presence in every maximum
/// clique are certified by enumeration.
pub fn build_clique_gadget(f: &CnfFormula, target: usize) -> Result<CliqueGadget, GadgetError> {
    let (karp, k) = reduce_3sat_to_clique(f)?;
    if target < k + 1 {
        return Err(GadgetError::TargetTooSmall { target, class: k + 1 });
    }
    let (mut g, _) = disjoint_union(&karp, &Graph::complete(k.saturating_sub(1)), "")?;
    let mut universal_set = Vec::new();
    for i in 0..target - k {
        let u = Graph::empty(1).with_role(format!("W{i}"), 0)?;
        let (h, map) = join(&g, &u, "")?;
        universal_set.push(map[0]);
        g = h;
    }
    let omega = omega_exact(&g);
    if !omega.witnesses.iter().all(|c| universal_set.iter().all(|w| c.binary_search(w).is_ok())) {
        return Err(GadgetError::CertificationFailed("a maximum clique misses the universal set".into()));
    }
    Ok(CliqueGadget { graph: g, omega_cert: omega.value, universal_set, target })
}

/// Joins the odd-numbered clique gadgets into `G_odd` and the even-numbered
/// ones into `G_even`, and links them by one edge between their first
/// vertices. Every maximum clique shares a vertex exactly when the split
/// index is odd. Universal vertices keep roles `c{i}:W{j}` for formula `i`
/// (0-based).
pub fn build_clique_parity_instance(inst: &SatParityInstance) -> Result<ReductionInstance, GadgetError> {
    let ks = inst
        .formulas()
        .iter()
        .map(|f| Ok(reduce_3sat_to_clique(f)?.1))
        .collect::<Result<Vec<_>, GadgetError>>()?;
    let target = ks.iter().max().expect("sequence is nonempty") + 1;
    let gadgets = inst
        .formulas()
        .iter()
        .map(|f| build_clique_gadget(f, target))
        .collect::<Result<Vec<_>, _>>()?;
    let side = |start: usize| -> Result<Graph, GadgetError> {
        let mut acc = Graph::empty(0);
        for i in (start..gadgets.len()).step_by(2) {
            acc = join(&acc, gadgets[i].graph(), &format!("c{i}"))?.0;
        }
        Ok(acc)
    };
    let (odd, even) = (side(0)?, side(1)?);
    let omega_odd = omega_exact(&odd).value;
    let omega_even = omega_exact(&even).value;
    let (g, map) = disjoint_union(&odd, &even, "")?;
    let g = g.with_edges(&[(0, map[0])])?.with_role("v", 0)?.with_role("u", map[0])?;

    let s = inst.split_index();
    let yes = s % 2 == 1;
    let (po, pe) = parity_lambdas(inst.half_len(), s, target);
    Ok(ReductionInstance {
        graph: g,
        kind: InstanceKind::Clique,
        parity: inst.clone(),
        predicted: Prediction {
            yes,
            summary: format!("singleton clique transversal: {} (s = {s})", yes_no(yes)),
            values: BTreeMap::from([("omega_odd".into(), po), ("omega_even".into(), pe), ("omega".into(), po.max(pe))]),
        },
        certificates: BTreeMap::from([("k".into(), target), ("omega_odd".into(), omega_odd), ("omega_even".into(), omega_even)]),
        host: None,
    })
}
