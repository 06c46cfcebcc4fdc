//! The path gadget `G(φ)`, padding, and the concatenations `G_odd`,
//! `G_even` of a SAT-Parity sequence.

use crate::cnf::{CnfFormula, SatParityInstance};
use crate::graph::{append_path, connect_with_path, disjoint_union, identify_vertices, Graph};
use crate::solvers::{BlockSolver, Budget};

use super::hampath::reduce_3sat_to_hampath;
use super::{Gadget, GadgetError};

/// Builds `G(f)` and certifies it by enumerating its longest paths.
///
/// With `m` the vertex count of the Hamiltonian-path graph `H(f)`: pendant
/// paths of length `m` at `x1` and `x2` end in `v` and `w`, and an extra
/// `x1 - x2` path of length `m - 2` runs outside `H(f)`. The class is
/// `k = 3m - 1`; `λ = k` when `f` is satisfiable and `k - 1` otherwise.
pub fn build_path_gadget(f: &CnfFormula, budget: Budget) -> Result<Gadget, GadgetError> {
    build_path_gadget_uncertified(f)?.certify_by_enumeration(budget)
}

pub(crate) fn build_path_gadget_uncertified(f: &CnfFormula) -> Result<Gadget, GadgetError> {
    let h = reduce_3sat_to_hampath(f)?;
    let m = h.graph.n();
    if m < 3 {
        return Err(GadgetError::GadgetTooSmall(m));
    }
    let (g, v) = append_path(&h.graph, h.x1, m)?;
    let (g, w) = append_path(&g, h.x2, m)?;
    let g = connect_with_path(&g, h.x1, h.x2, m - 2)?;
    Gadget::new(g, v, w, 3 * m - 1)
}

/// Extends `gd` to class `target` with a path of length `target - k` at
/// `w`, whose tip becomes the new `w`. The result is re-certified by
/// enumeration; a zero extension returns `gd` unchanged.
pub fn pad_gadget(gd: &Gadget, target: usize, budget: Budget) -> Result<Gadget, GadgetError> {
    gd.require_certified()?;
    let class = gd.class_k();
    if target < class {
        return Err(GadgetError::TargetTooSmall { target, class });
    }
    if target == class {
        return Ok(gd.clone());
    }
    let (g, tip) = append_path(gd.graph(), gd.w(), target - class)?;
    Gadget::new(g, gd.v(), tip, target)?.certify_by_enumeration(budget)
}

/// `G_odd` and `G_even` with their building blocks.
#[derive(Debug, Clone)]
pub struct OddEven {
    pub odd: Gadget,
    pub even: Gadget,
    /// Common class after padding.
    pub k: usize,
    /// Padded gadget of every formula, in sequence order.
    pub parts: Vec<Gadget>,
}

/// Pads every formula gadget to the largest class and concatenates the
/// odd-numbered (1st, 3rd, ...) and even-numbered ones, identifying each
/// `w` with the next `v`. The concatenations are certified with the block
/// solver; their roles are `v_o, w_o` and `v_e, w_e`.
pub fn build_odd_even(inst: &SatParityInstance, budget: Budget) -> Result<OddEven, GadgetError> {
    let raw = inst
        .formulas()
        .iter()
        .map(|f| build_path_gadget(f, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let k = raw.iter().map(Gadget::class_k).max().expect("sequence is nonempty");
    let parts = raw.iter().map(|g| pad_gadget(g, k, budget)).collect::<Result<Vec<_>, _>>()?;
    let mut solver = BlockSolver::new(budget);
    let odd = concatenate(parts.iter().step_by(2), "o", &mut solver)?;
    let even = concatenate(parts.iter().skip(1).step_by(2), "e", &mut solver)?;
    Ok(OddEven { odd, even, k, parts })
}

/// Chains certified gadgets `w -> v`. Roles of part `i` are kept under the
/// prefix `"{tag}{i}"`.
pub fn concatenate<'a>(
    parts: impl IntoIterator<Item = &'a Gadget>,
    tag: &str,
    solver: &mut BlockSolver,
) -> Result<Gadget, GadgetError> {
    let mut acc: Option<(Graph, usize, usize)> = None;
    let mut class = 0;
    for (i, p) in parts.into_iter().enumerate() {
        p.require_certified()?;
        class += p.class_k();
        let prefix = format!("{tag}{i}");
        acc = Some(match acc {
            None => {
                let (g, map) = disjoint_union(&Graph::empty(0), p.graph(), &prefix)?;
                (g, map[p.v()], map[p.w()])
            }
            Some((g, v, w)) => {
                let (u, map) = disjoint_union(&g, p.graph(), &prefix)?;
                let id = identify_vertices(&u, w, map[p.v()])?;
                (id.graph, id.map[v], id.map[map[p.w()]])
            }
        });
    }
    let (g, v, w) = acc.ok_or(crate::cnf::CnfError::EmptySequence)?;
    let g = g.with_role(format!("v_{tag}"), v)?.with_role(format!("w_{tag}"), w)?;
    Gadget::new(g, v, w, class)?.certify_by_blocks(solver)
}

/// `(λ(G_odd), λ(G_even))` for a sequence of length `2n` with split index
/// `s` and common class `k`.
pub fn parity_lambdas(n: usize, s: usize, k: usize) -> (usize, usize) {
    assert!(s <= 2 * n && k >= 1);
    if s.is_multiple_of(2) {
        let both = (s / 2) * k + ((2 * n - s) / 2) * (k - 1);
        (both, both)
    } else {
        let odd = s.div_ceil(2) * k + ((2 * n - s - 1) / 2) * (k - 1);
        let even = ((s - 1) / 2) * k + (2 * n - s).div_ceil(2) * (k - 1);
        (odd, even)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{brute_force_sat, make_formula, make_parity_instance, FormulaKind};
    use crate::gadgets::hampath_vertex_count;
    use crate::solvers::lambda_exact;

    fn b() -> Budget {
        Budget::default()
    }

    fn sat_f() -> CnfFormula {
        make_formula(FormulaKind::TriviallySat, 0)
    }

    fn unsat_f() -> CnfFormula {
        make_formula(FormulaKind::TriviallyUnsat, 0)
    }

    #[test]
    fn gadget_lengths_follow_satisfiability() {
        for f in [sat_f(), unsat_f(), CnfFormula::new(2, vec![[1, 2, 2], [-1, -2, -2]]).unwrap()] {
            let m = hampath_vertex_count(&f);
            let g = build_path_gadget(&f, b()).unwrap();
            assert_eq!(g.graph().n(), 4 * m - 3);
            assert_eq!(g.class_k(), 3 * m - 1);
            let sat = brute_force_sat(&f).unwrap().satisfiable;
            let expect = if sat { 3 * m - 1 } else { 3 * m - 2 };
            assert_eq!(g.cert().unwrap().lambda, expect);
            assert!(g.endpoints_cert());
            assert_eq!(g.graph().degree(g.v()), 1);
        }
    }

    #[test]
    fn padding() {
        let g = build_path_gadget(&sat_f(), b()).unwrap();
        assert_eq!(pad_gadget(&g, g.class_k(), b()).unwrap(), g);
        assert!(matches!(pad_gadget(&g, g.class_k() - 1, b()), Err(GadgetError::TargetTooSmall { .. })));
        let u = build_path_gadget(&unsat_f(), b()).unwrap();
        let p = pad_gadget(&u, u.class_k() + 3, b()).unwrap();
        assert_eq!(p.cert().unwrap().lambda, u.cert().unwrap().lambda + 3);
        assert!(p.endpoints_cert());
        assert_eq!(p.graph().role("w"), Some(p.w()));
        let raw = Gadget::plain_path(2).unwrap();
        assert!(matches!(pad_gadget(&raw, 3, b()), Err(GadgetError::Uncertified)));
    }

    #[test]
    fn odd_even_match_formulas() {
        for s in 0..=2 {
            let mut fs = vec![unsat_f(), unsat_f()];
            for f in fs.iter_mut().take(s) {
                *f = sat_f();
            }
            let inst = make_parity_instance(fs).unwrap();
            let oe = build_odd_even(&inst, b()).unwrap();
            let (lo, le) = parity_lambdas(1, s, oe.k);
            assert_eq!(oe.odd.lambda_cert(), Some(lo), "s = {s}");
            assert_eq!(oe.even.lambda_cert(), Some(le), "s = {s}");
            assert!(oe.odd.endpoints_cert() && oe.even.endpoints_cert());
            assert_eq!(lambda_exact(oe.odd.graph(), b()).unwrap().value, lo);
        }
    }

    #[test]
    fn longer_sequence_concatenates() {
        let fs = vec![sat_f(), sat_f(), sat_f(), unsat_f()];
        let inst = make_parity_instance(fs).unwrap();
        let oe = build_odd_even(&inst, b()).unwrap();
        let (lo, le) = parity_lambdas(2, 3, oe.k);
        assert_eq!((oe.odd.lambda_cert(), oe.even.lambda_cert()), (Some(lo), Some(le)));
        assert_eq!(lo, le + 1);
        let g = oe.odd.graph();
        assert_eq!(g.role("v_o"), Some(oe.odd.v()));
        assert_eq!(g.role("w_o"), Some(oe.odd.w()));
        assert!(g.role("o1:x1").is_some());
    }

    #[test]
    fn formula_values() {
        assert_eq!(parity_lambdas(1, 0, 10), (9, 9));
        assert_eq!(parity_lambdas(1, 1, 10), (10, 9));
        assert_eq!(parity_lambdas(1, 2, 10), (10, 10));
        assert_eq!(parity_lambdas(3, 3, 10), (29, 28));
    }
}
