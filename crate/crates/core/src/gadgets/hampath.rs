//! 3-SAT to Hamiltonian path.
//!
//! Each variable `i` gets a ladder of `L_i = max(1, 2·o_i)` rungs, where
//! `o_i` counts the (clause, literal) occurrences of `i` after removing
//! repeated literals inside a clause. Rung `k` is the edge `u_k - d_k`;
//! the rails are `u_k - u_{k+1}` and `d_k - d_{k+1}`. Hub vertices
//! `t_0..t_n` chain the ladders: `t_{i-1}` sees `u_0, d_0` and `t_i` sees
//! `u_{L-1}, d_{L-1}` of ladder `i`. A Hamiltonian traversal crosses each
//! ladder in a zigzag, and the zigzag's starting rail fixes the truth value.
//!
//! The `j`-th occurrence of variable `i` uses rungs `k = 2j` and `k + 1`:
//! a positive literal joins its clause vertex to `d_k, d_{k+1}`, a negative
//! one to `u_k, u_{k+1}`. Pendant vertices `x1` at `t_0` and `x2` at `t_n`
//! force every Hamiltonian path to run from `x1` to `x2`.
//!
//! Vertex count: `(n + 1) + c + Σ_i 2·L_i + 2` for `n` variables and `c`
//! clauses. Ids: hubs first, then clause vertices, then for each variable
//! its `u` rungs followed by its `d` rungs, then `x1`, `x2`.

use crate::cnf::{CnfError, CnfFormula, MAX_BRUTE_FORCE_VARS};
use crate::graph::Graph;

use super::GadgetError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamPathReduction {
    pub graph: Graph,
    pub x1: usize,
    pub x2: usize,
}

/// Occurrence lists per variable: `(clause index, positive)`.
fn occurrences(f: &CnfFormula) -> Vec<Vec<(usize, bool)>> {
    let mut occ = vec![Vec::new(); f.num_vars() + 1];
    for (j, c) in f.clauses().iter().enumerate() {
        let mut lits = c.to_vec();
        lits.sort_unstable();
        lits.dedup();
        for l in lits {
            occ[l.unsigned_abs() as usize].push((j, l > 0));
        }
    }
    occ
}

/// Vertex count of [`reduce_3sat_to_hampath`] on `f`.
pub fn hampath_vertex_count(f: &CnfFormula) -> usize {
    let occ = occurrences(f);
    let ladders: usize = occ[1..].iter().map(|o| 2 * (2 * o.len()).max(1)).sum();
    f.num_vars() + 1 + f.clauses().len() + ladders + 2
}

/// Builds `H(f)`: Hamiltonian `x1 - x2` path when `f` is satisfiable, no
/// Hamiltonian path at all otherwise.
pub fn reduce_3sat_to_hampath(f: &CnfFormula) -> Result<HamPathReduction, GadgetError> {
    if f.num_vars() > MAX_BRUTE_FORCE_VARS {
        return Err(CnfError::TooManyVariables(f.num_vars()).into());
    }
    let occ = occurrences(f);
    let nv = f.num_vars();
    let hubs = 0..=nv;
    let clause_base = nv + 1;
    let mut next = clause_base + f.clauses().len();
    let mut edges = Vec::new();
    for i in 1..=nv {
        let len = (2 * occ[i].len()).max(1);
        let u = next;
        let d = next + len;
        next += 2 * len;
        for k in 0..len {
            edges.push((u + k, d + k));
            if k + 1 < len {
                edges.push((u + k, u + k + 1));
                edges.push((d + k, d + k + 1));
            }
        }
        edges.extend([(i - 1, u), (i - 1, d), (i, u + len - 1), (i, d + len - 1)]);
        for (jj, &(j, pos)) in occ[i].iter().enumerate() {
            let k = 2 * jj;
            let rail = if pos { d } else { u };
            edges.push((clause_base + j, rail + k));
            edges.push((clause_base + j, rail + k + 1));
        }
    }
    let (x1, x2) = (next, next + 1);
    edges.push((x1, *hubs.start()));
    edges.push((x2, *hubs.end()));
    let graph = Graph::from_edge_list(next + 2, &edges, [("x1", x1), ("x2", x2)])?;
    Ok(HamPathReduction { graph, x1, x2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::brute_force_sat;
    use proptest::prelude::*;

    /// Plain backtracking search for a Hamiltonian path, returning one.
    fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
        fn go(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
            if path.len() == g.n() {
                return true;
            }
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if !used[w] {
                    used[w] = true;
                    path.push(w);
                    if go(g, path, used) {
                        return true;
                    }
                    path.pop();
                    used[w] = false;
                }
            }
            false
        }
        // A Hamiltonian path must start at a degree-1 vertex if there is one.
        let starts: Vec<usize> = match (0..g.n()).find(|&v| g.degree(v) == 1) {
            Some(v) => vec![v],
            None => (0..g.n()).collect(),
        };
        for s in starts {
            let mut used = vec![false; g.n()];
            used[s] = true;
            let mut path = vec![s];
            if go(g, &mut path, &mut used) {
                return Some(path);
            }
        }
        None
    }

    fn f(nv: usize, cs: &[[i32; 3]]) -> CnfFormula {
        CnfFormula::new(nv, cs.to_vec()).unwrap()
    }

    #[test]
    fn single_clause_has_hamiltonian_path() {
        let phi = f(1, &[[1, 1, 1]]);
        let r = reduce_3sat_to_hampath(&phi).unwrap();
        assert_eq!(r.graph.n(), 9);
        let p = hamiltonian_path(&r.graph).unwrap();
        let ends = [p[0].min(p[p.len() - 1]), p[0].max(p[p.len() - 1])];
        assert_eq!(ends, [r.x1, r.x2]);
    }

    #[test]
    fn contradiction_has_no_hamiltonian_path() {
        let phi = f(1, &[[1, 1, 1], [-1, -1, -1]]);
        let r = reduce_3sat_to_hampath(&phi).unwrap();
        assert_eq!(r.graph.n(), 14);
        assert_eq!(hampath_vertex_count(&phi), 14);
        assert!(hamiltonian_path(&r.graph).is_none());
    }

    #[test]
    fn unused_variable_gets_one_rung() {
        let phi = f(2, &[[2, 2, 2]]);
        // hubs 3, clause 1, ladders 2 + 4, pendants 2
        assert_eq!(hampath_vertex_count(&phi), 12);
        assert!(hamiltonian_path(&reduce_3sat_to_hampath(&phi).unwrap().graph).is_some());
    }

    fn clause() -> impl Strategy<Value = [i32; 3]> {
        let lit = prop_oneof![Just(1), Just(-1), Just(2), Just(-2)];
        [lit.clone(), lit.clone(), lit]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]
        #[test]
        fn hamiltonian_iff_satisfiable(cs in prop::collection::vec(clause(), 1..=2)) {
            let phi = f(2, &cs);
            let r = reduce_3sat_to_hampath(&phi).unwrap();
            prop_assert_eq!(r.graph.n(), hampath_vertex_count(&phi));
            let sat = brute_force_sat(&phi).unwrap().satisfiable;
            let p = hamiltonian_path(&r.graph);
            prop_assert_eq!(p.is_some(), sat);
            if let Some(p) = p {
                let mut ends = [p[0], p[p.len() - 1]];
                ends.sort_unstable();
                prop_assert_eq!(ends, [r.x1, r.x2]);
            }
        }
    }
}
