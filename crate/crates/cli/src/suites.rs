//! Named verification suites. Each one rebuilds a construction, solves it
//! exactly, and records expected-versus-observed checks.

use clap::ValueEnum;
use gallai_core::cnf::{brute_force_sat, make_formula, make_parity_instance, CnfFormula, FormulaKind, SatParityInstance};
use gallai_core::gadgets::{
    build_clique_parity_instance, build_lct_instance, build_lpt_instance, build_odd_even, build_path_gadget,
    build_theta2_instance, build_wz, build_wz_paths, hampath_vertex_count, parity_lambdas, sha256_hex, WZ_GOLDEN, WZ_GOLDEN_SHA256,
};
use gallai_core::generate::{random_connected_graph, random_formula, rng};
use gallai_core::graph::replace_edge;
use gallai_core::solvers::{
    clique_singleton_transversal, enumerate_longest_paths, gallai_vertices, gamma_exact, gamma_via_quotient, lambda_exact,
    lambda_via_blocks, lpt_exact, BlockSolver, WeightedGraph,
};
use gallai_core::{theta2_decide_clique_singleton, theta2_decide_gallai, Budget, Graph, Method, SolveError};
use rand::Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::report::SuiteReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Golden graph: λ = 9, no Gallai vertex, lpt = 2.
    Wz,
    /// Pendant paths on the golden core, all lengths up to --max-k.
    PendantPaths,
    /// Path gadget lengths and endpoints.
    PathGadget,
    /// λ of the odd/even concatenations.
    OddEven,
    /// Gallai vertex exists iff the split index is odd.
    Theta2,
    /// Longest path transversal instance on the golden graph.
    LptInapprox,
    /// Longest cycle transversal instance on two bridged triangles.
    LctInapprox,
    /// Clique parity instance.
    CliqueParity,
    /// Query-table verdicts against direct solvers on random graphs.
    OracleEquiv,
    /// Solver cross-validation on random graphs.
    SolverCross,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Wz => "wz",
            Suite::PendantPaths => "pendant-paths",
            Suite::PathGadget => "path-gadget",
            Suite::OddEven => "odd-even",
            Suite::Theta2 => "theta2",
            Suite::LptInapprox => "lpt-inapprox",
            Suite::LctInapprox => "lct-inapprox",
            Suite::CliqueParity => "clique-parity",
            Suite::OracleEquiv => "oracle-equiv",
            Suite::SolverCross => "solver-cross",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Largest pendant length for `pendant-paths`.
    pub max_k: usize,
    /// Random instance count; `None` uses each suite's default.
    pub count: Option<usize>,
    pub budget: Budget,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { seed: 1, max_k: 3, count: None, budget: Budget::default() }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new(suite.name(), opts.seed);
    match suite {
        Suite::Wz => wz(&mut r, opts)?,
        Suite::PendantPaths => pendant_paths(&mut r, opts)?,
        Suite::PathGadget => path_gadget(&mut r, opts)?,
        Suite::OddEven => odd_even(&mut r, opts)?,
        Suite::Theta2 => theta2(&mut r, opts)?,
        Suite::LptInapprox => lpt(&mut r, opts)?,
        Suite::LctInapprox => lct(&mut r, opts)?,
        Suite::CliqueParity => clique(&mut r)?,
        Suite::OracleEquiv => oracle_equiv(&mut r, opts)?,
        Suite::SolverCross => solver_cross(&mut r, opts)?,
    }
    Ok(r)
}

/// `[sat; s] ++ [unsat; 2 - s]` with distinct variables per slot.
pub fn small_parity(s: usize) -> Result<SatParityInstance, CliError> {
    let fs = (0..2)
        .map(|i| make_formula(if i < s { FormulaKind::TriviallySat } else { FormulaKind::TriviallyUnsat }, i as u64))
        .collect();
    Ok(make_parity_instance(fs)?)
}

/// Two triangles joined by the bridge `2 - 3`.
pub fn two_triangles() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)], std::iter::empty::<(String, usize)>())
        .expect("fixed edge list is valid")
}

fn gallai_by_blocks(solver: &mut BlockSolver, g: &Graph) -> Result<(usize, Vec<usize>), SolveError> {
    let lam = solver.lambda(g)?.value;
    let mut set = Vec::new();
    for v in 0..g.n() {
        if solver.lambda(&g.remove_vertex(v).0)?.value < lam {
            set.push(v);
        }
    }
    Ok((lam, set))
}

fn gamma_or_zero(r: Result<usize, SolveError>) -> Result<usize, SolveError> {
    match r {
        Err(SolveError::Acyclic) => Ok(0),
        r => r,
    }
}

fn wz(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    r.check("golden file checksum", WZ_GOLDEN_SHA256.to_string(), sha256_hex(WZ_GOLDEN));
    let g = build_wz();
    let lam = lambda_exact(&g, o.budget)?;
    r.check_with_nodes("longest path length", 9, lam.value, lam.nodes);
    r.check("Gallai vertices", Vec::<usize>::new(), gallai_vertices(&g, o.budget)?);
    let t = lpt_exact(&g, o.budget)?;
    r.check("longest path transversal number", 2, t.size);
    Ok(())
}

fn pendant_paths(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    if o.max_k == 0 {
        return Err(CliError::Usage("--max-k must be at least 1".into()));
    }
    for kt in 1..=o.max_k {
        for kl in 1..=o.max_k {
            for kr in 1..=o.max_k {
                let g = build_wz_paths(kt, kl, kr)?;
                let lam = lambda_exact(&g, o.budget)?;
                let equal = kt == kl && kl == kr;
                let mut ks = [kt, kl, kr];
                ks.sort_unstable_by(|a, b| b.cmp(a));
                let expect = if equal { 2 * kt + 7 } else { ks[0] + ks[1] + 7 };
                let has = !gallai_vertices(&g, o.budget)?.is_empty();
                r.check_with_nodes(
                    format!("({kt}, {kl}, {kr}): longest path, has Gallai vertex"),
                    (expect, !equal),
                    (lam.value, has),
                    lam.nodes,
                );
            }
        }
    }
    Ok(())
}

fn path_gadget(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    let f = |nv: usize, cs: &[[i32; 3]]| CnfFormula::new(nv, cs.to_vec());
    let mut formulas = vec![
        f(1, &[[1, 1, 1]])?,
        f(1, &[[1, 1, 1], [-1, -1, -1]])?,
        f(2, &[[2, 2, 2], [-2, -2, -2]])?,
        f(2, &[[1, 2, 2], [-1, -2, -2]])?,
        f(3, &[[3, 3, 3], [-3, -3, -3]])?,
        f(3, &[[1, -2, 3]])?,
    ];
    let mut g = rng(o.seed);
    for _ in 0..o.count.unwrap_or(4) {
        let nv = g.gen_range(1..=3);
        let nc = g.gen_range(1..=2);
        formulas.push(random_formula(&mut g, nv, nc));
    }
    for (i, phi) in formulas.iter().enumerate() {
        let m = hampath_vertex_count(phi);
        let sat = brute_force_sat(phi)?.satisfiable;
        let gd = build_path_gadget(phi, o.budget)?;
        let all = enumerate_longest_paths(gd.graph(), o.budget)?;
        let expect = if sat { 3 * m - 1 } else { 3 * m - 2 };
        r.check_with_nodes(format!("formula {i} (satisfiable: {sat}) longest path"), expect, all.value, all.nodes);
        let ends = (gd.v().min(gd.w()), gd.v().max(gd.w()));
        let ok = all.witnesses.iter().all(|p| (p[0], p[p.len() - 1]) == ends);
        r.check(format!("formula {i} longest paths run v to w"), true, ok);
    }
    Ok(())
}

fn odd_even(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    for s in 0..=2 {
        let oe = build_odd_even(&small_parity(s)?, o.budget)?;
        let lo = lambda_via_blocks(oe.odd.graph(), o.budget)?;
        let le = lambda_via_blocks(oe.even.graph(), o.budget)?;
        r.check(format!("s = {s} odd/even longest paths"), parity_lambdas(1, s, oe.k), (lo.value, le.value));
    }
    Ok(())
}

fn theta2(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    let mut solver = BlockSolver::new(o.budget);
    for s in 0..=2 {
        let inst = build_theta2_instance(&small_parity(s)?, o.budget)?;
        let (lam, set) = gallai_by_blocks(&mut solver, &inst.graph)?;
        r.check(format!("s = {s} longest path"), inst.predicted.values["lambda"], lam);
        r.check(format!("s = {s} has Gallai vertex"), s % 2 == 1, !set.is_empty());
        let t = theta2_decide_gallai(&inst.graph, Method::Blocks, o.budget)?;
        r.check(format!("s = {s} query-table verdict"), !set.is_empty(), t.verdict);
    }
    Ok(())
}

fn lpt(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    let h = build_wz();
    let x = h.role("v_T").expect("golden graph has v_T");
    let mut solver = BlockSolver::new(o.budget);
    for s in 0..=2 {
        let inst = build_lpt_instance(&h, x, &small_parity(s)?, o.budget)?;
        let (lam, set) = gallai_by_blocks(&mut solver, &inst.graph)?;
        r.check(format!("s = {s} longest path"), inst.predicted.values["lambda"], lam);
        if s % 2 == 0 {
            r.check(format!("s = {s} Gallai vertices"), Vec::<usize>::new(), set);
        } else {
            r.check(format!("s = {s} x is a Gallai vertex"), true, set.contains(&x));
        }
    }
    Ok(())
}

fn lct(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    let h = two_triangles();
    let e0 = (0, 1);
    for s in 0..=2 {
        let parity = small_parity(s)?;
        let inst = build_lct_instance(&h, e0, &parity, o.budget)?;
        let (lo, le) = (inst.certificates["lambda_odd"], inst.certificates["lambda_even"]);
        let oe = build_odd_even(&parity, o.budget)?;
        let inner = gamma_or_zero(gamma_exact(oe.odd.graph(), o.budget).map(|x| x.value))?
            .max(gamma_or_zero(gamma_exact(oe.even.graph(), o.budget).map(|x| x.value))?);
        let weight = |u: usize, v: usize| if (u, v) == e0 { lo } else { le };
        let gamma = gamma_via_quotient(&WeightedGraph::from_fn(h.clone(), weight))?.max(inner);
        r.check(format!("s = {s} longest cycle"), inst.predicted.values["gamma"], gamma);
        if s % 2 == 1 {
            let (hx, _) = h.remove_vertex(e0.0);
            let without = gamma_or_zero(gamma_via_quotient(&WeightedGraph::from_fn(hx, |_, _| le)))?.max(inner);
            r.check(format!("s = {s} x0 meets every longest cycle"), true, without < gamma);
        }
    }
    let mut g = h.clone();
    for &(a, b) in h.edges() {
        let len = if (a, b) == e0 { 3 } else { 2 };
        g = replace_edge(&g, (a, b), &Graph::path(len + 1), 0, len, &format!("p{a}_{b}"))?.0;
    }
    let q = gamma_via_quotient(&WeightedGraph::from_fn(h, |u, v| if (u, v) == e0 { 3 } else { 2 }))?;
    let naive = gamma_exact(&g, o.budget)?;
    r.check_with_nodes("plain-path substitution: quotient equals naive", q, naive.value, naive.nodes);
    Ok(())
}

fn clique(r: &mut SuiteReport) -> Result<(), CliError> {
    for s in 0..=2 {
        let inst = build_clique_parity_instance(&small_parity(s)?)?;
        let observed = (inst.certificates["omega_odd"], inst.certificates["omega_even"]);
        let expected = (inst.predicted.values["omega_odd"], inst.predicted.values["omega_even"]);
        r.check(format!("s = {s} clique numbers"), expected, observed);
        let t = clique_singleton_transversal(&inst.graph);
        r.check(format!("s = {s} singleton transversal exists"), s % 2 == 1, !t.is_empty());
        r.check(format!("s = {s} query-table verdict"), !t.is_empty(), theta2_decide_clique_singleton(&inst.graph).verdict);
    }
    Ok(())
}

fn oracle_equiv(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    let mut g = rng(o.seed);
    for i in 0..o.count.unwrap_or(50) {
        let n = g.gen_range(1..=10);
        let p = g.gen_range(0.0..0.5);
        let h = random_connected_graph(&mut g, n, p);
        let direct = (!gallai_vertices(&h, o.budget)?.is_empty(), !clique_singleton_transversal(&h).is_empty());
        let tables = (
            theta2_decide_gallai(&h, Method::Naive, o.budget)?.verdict,
            theta2_decide_clique_singleton(&h).verdict,
        );
        r.check(format!("graph {i} (n = {n}): Gallai and clique verdicts"), direct, tables);
    }
    Ok(())
}

fn solver_cross(r: &mut SuiteReport, o: &SuiteOptions) -> Result<(), CliError> {
    let mut g = rng(o.seed);
    let scale = |d: usize| o.count.unwrap_or(d);
    for i in 0..scale(100) {
        let n = g.gen_range(1..=12);
        let p = g.gen_range(0.0..0.4);
        let h = random_connected_graph(&mut g, n, p);
        let naive = lambda_exact(&h, o.budget)?;
        r.check_with_nodes(format!("graph {i}: block solver equals naive"), naive.value, lambda_via_blocks(&h, o.budget)?.value, naive.nodes);
    }
    for i in 0..scale(50) {
        let n = g.gen_range(1..=10);
        let p = g.gen_range(0.0..0.4);
        let h = random_connected_graph(&mut g, n, p);
        let all = enumerate_longest_paths(&h, o.budget)?;
        let by_enum: Vec<usize> = (0..n).filter(|v| all.witnesses.iter().all(|p| p.contains(v))).collect();
        r.check(format!("graph {i}: Gallai by deletion equals by enumeration"), by_enum, gallai_vertices(&h, o.budget)?);
    }
    let mut done = 0;
    while done < scale(30) {
        let n = g.gen_range(3..=10);
        let p = g.gen_range(0.05..0.4);
        let h = random_connected_graph(&mut g, n, p);
        let exact = match gamma_exact(&h, o.budget) {
            Err(SolveError::Acyclic) => continue,
            e => e?,
        };
        r.check(format!("cyclic graph {done}: unit quotient equals longest cycle"), exact.value, gamma_via_quotient(&WeightedGraph::unit(h))?);
        done += 1;
    }
    Ok(())
}
