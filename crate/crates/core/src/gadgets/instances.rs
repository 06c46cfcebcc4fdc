//! Parity instances for Gallai vertices, longest path transversals and
//! longest cycle transversals.

use std::collections::BTreeMap;

use crate::cnf::SatParityInstance;
use crate::graph::{attach_at, replace_edge, Graph, GraphError};
use crate::solvers::{enumerate_longest_cycles, enumerate_longest_paths, lct_exact, lpt_exact, Budget, SolveError};

use super::path_gadget::{build_odd_even, OddEven};
use super::wz::build_wz_core;
use super::{yes_no, GadgetError, InstanceKind, Prediction, ReductionInstance};

fn base_certificates(oe: &OddEven) -> Result<BTreeMap<String, usize>, GadgetError> {
    let odd = oe.odd.require_certified()?.lambda;
    let even = oe.even.require_certified()?.lambda;
    Ok(BTreeMap::from([("k".into(), oe.k), ("lambda_odd".into(), odd), ("lambda_even".into(), even)]))
}

/// The Walther–Zamfirescu core with `G_odd` hanging from `T` and a copy of
/// `G_even` from each of `L` and `R`. It has a Gallai vertex exactly when
/// the split index is odd.
pub fn build_theta2_instance(inst: &SatParityInstance, budget: Budget) -> Result<ReductionInstance, GadgetError> {
    let oe = build_odd_even(inst, budget)?;
    let certificates = base_certificates(&oe)?;
    let mut g = build_wz_core();
    for (role, gd, prefix) in [("T", &oe.odd, "odd"), ("L", &oe.even, "even_L"), ("R", &oe.even, "even_R")] {
        let at = g.role(role).expect("core carries T, L, R");
        let (h, map) = attach_at(&g, at, gd.graph(), gd.v(), prefix)?;
        g = h.with_role(format!("v_{role}"), map[gd.w()])?;
    }
    let (lo, le) = (certificates["lambda_odd"], certificates["lambda_even"]);
    let s = inst.split_index();
    let yes = s % 2 == 1;
    // Pendant lengths (lo, le, le): all equal gives 2k + 7, otherwise the
    // two largest plus 7.
    let lambda = if lo == le { 2 * le + 7 } else { lo + le + 7 };
    Ok(ReductionInstance {
        graph: g,
        kind: InstanceKind::Gallai,
        parity: inst.clone(),
        predicted: Prediction {
            yes,
            summary: format!("Gallai vertex: {} (s = {s})", yes_no(yes)),
            values: BTreeMap::from([("lambda".into(), lambda)]),
        },
        certificates,
        host: None,
    })
}

/// `h` with `G_odd` attached at `x` and a copy of `G_even` at every other
/// vertex. `x` must start some longest path of `h`. Vertices of `h` keep
/// their ids.
pub fn build_lpt_instance(h: &Graph, x: usize, inst: &SatParityInstance, budget: Budget) -> Result<ReductionInstance, GadgetError> {
    if x >= h.n() {
        return Err(GraphError::VertexOutOfRange { vertex: x, n: h.n() }.into());
    }
    let paths = enumerate_longest_paths(h, budget)?;
    if !paths.witnesses.iter().any(|p| p[0] == x || p[p.len() - 1] == x) {
        return Err(GadgetError::AnchorNotLongestPathEndpoint(x));
    }
    let lpt_h = lpt_exact(h, budget)?.size;
    let oe = build_odd_even(inst, budget)?;
    let mut certificates = base_certificates(&oe)?;
    certificates.insert("lambda_host".into(), paths.value);
    certificates.insert("lpt_host".into(), lpt_h);

    let mut g = h.clone();
    for at in 0..h.n() {
        let (gd, prefix) = if at == x { (&oe.odd, "odd".to_string()) } else { (&oe.even, format!("even{at}")) };
        g = attach_at(&g, at, gd.graph(), gd.v(), &prefix)?.0;
    }
    let g = g.with_role("x", x)?;

    let (lo, le) = (certificates["lambda_odd"], certificates["lambda_even"]);
    let s = inst.split_index();
    let yes = s % 2 == 1;
    let (lambda, lpt) = if yes { (paths.value + lo + le, 1) } else { (paths.value + 2 * le, lpt_h) };
    Ok(ReductionInstance {
        graph: g,
        kind: InstanceKind::Lpt,
        parity: inst.clone(),
        predicted: Prediction {
            yes,
            summary: format!("lpt: {lpt} (s = {s})"),
            values: BTreeMap::from([("lambda".into(), lambda), ("lpt".into(), lpt)]),
        },
        certificates,
        host: Some(h.clone()),
    })
}

/// `h` with `e0` replaced by `G_odd` and every other edge by a copy of
/// `G_even`, each oriented from its smaller to its larger endpoint. `e0`
/// must lie on a longest cycle of `h`. Roles `x0`, `y0` mark the ends of
/// `e0`.
pub fn build_lct_instance(
    h: &Graph,
    e0: (usize, usize),
    inst: &SatParityInstance,
    budget: Budget,
) -> Result<ReductionInstance, GadgetError> {
    let (x0, y0) = (e0.0.min(e0.1), e0.0.max(e0.1));
    if !h.has_edge(x0, y0) {
        return Err(GraphError::EdgeAbsent(x0, y0).into());
    }
    // An acyclic host has no longest cycle for `e0` to lie on.
    let cycles = match enumerate_longest_cycles(h, budget) {
        Err(SolveError::Acyclic) => return Err(GadgetError::AnchorNotOnLongestCycle(x0, y0)),
        r => r?,
    };
    let on_cycle = cycles.witnesses.iter().any(|c| {
        (0..c.len()).any(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            (a.min(b), a.max(b)) == (x0, y0)
        })
    });
    if !on_cycle {
        return Err(GadgetError::AnchorNotOnLongestCycle(x0, y0));
    }
    let lct_h = lct_exact(h, budget)?.size;
    let oe = build_odd_even(inst, budget)?;
    let mut certificates = base_certificates(&oe)?;
    certificates.insert("gamma_host".into(), cycles.value);
    certificates.insert("lct_host".into(), lct_h);

    let mut g = h.clone();
    for &(a, b) in h.edges() {
        let (gd, prefix) = if (a, b) == (x0, y0) {
            (&oe.odd, "odd".to_string())
        } else {
            (&oe.even, format!("even{a}_{b}"))
        };
        g = replace_edge(&g, (a, b), gd.graph(), gd.v(), gd.w(), &prefix)?.0;
    }
    let g = g.with_role("x0", x0)?.with_role("y0", y0)?;

    let (lo, le) = (certificates["lambda_odd"], certificates["lambda_even"]);
    let gamma_h = cycles.value;
    let s = inst.split_index();
    let yes = s % 2 == 1;
    let (gamma, lct) = if yes { ((gamma_h - 1) * le + lo, 1) } else { (gamma_h * le, lct_h) };
    Ok(ReductionInstance {
        graph: g,
        kind: InstanceKind::Lct,
        parity: inst.clone(),
        predicted: Prediction {
            yes,
            summary: format!("lct: {lct} (s = {s})"),
            values: BTreeMap::from([("gamma".into(), gamma), ("lct".into(), lct)]),
        },
        certificates,
        host: Some(h.clone()),
    })
}
