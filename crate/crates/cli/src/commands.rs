//! `solve`, `build` and `verify`.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use gallai_core::gadgets::{
    build_clique_parity_instance, build_lct_instance, build_lpt_instance, build_path_gadget, build_theta2_instance,
    build_wz, build_wz_paths, write_bundle,
};
use gallai_core::graph::io;
use gallai_core::solvers::{
    clique_singleton_transversal, gallai_vertices, gamma_exact, lambda_exact, lambda_via_blocks, lct_exact, lpt_exact,
    omega_exact, BlockSolver,
};
use gallai_core::{make_parity_instance, parse_dimacs, Budget, CnfFormula, Graph, Method};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::SuiteReport;
use crate::suites::{run_suite, two_triangles, Suite, SuiteOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Lambda,
    Gamma,
    Omega,
    Gallai,
    Lpt,
    Lct,
    CliqueSingleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Wz,
    WzPaths,
    PathGadget,
    ParityGallai,
    ParityLpt,
    ParityLct,
    ParityClique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildArgs {
    pub target: Target,
    pub out: Option<PathBuf>,
    pub kt: usize,
    pub kl: usize,
    pub kr: usize,
    pub cnf: Option<PathBuf>,
    pub cnfs: Vec<PathBuf>,
    pub manifest: Option<PathBuf>,
    pub host: Option<PathBuf>,
    pub x: Option<usize>,
    pub edge: Option<(usize, usize)>,
}

impl BuildArgs {
    pub fn new(target: Target) -> Self {
        Self {
            target,
            out: None,
            kt: 1,
            kl: 1,
            kr: 1,
            cnf: None,
            cnfs: Vec::new(),
            manifest: None,
            host: None,
            x: None,
            edge: None,
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let g = if text.trim_start().starts_with('{') { io::from_json(&text)? } else { io::from_edge_list(&text)? };
    Ok(g)
}

fn read_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    parse_dimacs(&read_text(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// CNF paths listed in a manifest, resolved against its directory. Either
/// a JSON object with a `formulas` array or one path per line (`#` starts
/// a comment).
pub fn manifest_paths(path: &Path) -> Result<Vec<PathBuf>, CliError> {
    let text = read_text(path)?;
    let names: Vec<String> = if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        v.get("formulas")
            .and_then(Value::as_array)
            .and_then(|a| a.iter().map(|x| x.as_str().map(str::to_string)).collect())
            .ok_or_else(|| CliError::Usage(format!("{}: expected a \"formulas\" array of paths", path.display())))?
    } else {
        text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).map(str::to_string).collect()
    };
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(names.into_iter().map(|n| base.join(n)).collect())
}

/// Runs one exact computation and returns `{task, method, result}`.
pub fn solve(g: &Graph, task: Task, method: Method, budget: Budget) -> Result<Value, CliError> {
    if method == Method::Blocks && !matches!(task, Task::Lambda | Task::Gallai) {
        return Err(CliError::Usage("--method blocks supports only --task lambda and --task gallai".into()));
    }
    let result = match (task, method) {
        (Task::Lambda, Method::Naive) => to(&lambda_exact(g, budget)?),
        (Task::Lambda, Method::Blocks) => to(&lambda_via_blocks(g, budget)?),
        (Task::Gallai, Method::Naive) => json!({ "vertices": gallai_vertices(g, budget)? }),
        (Task::Gallai, Method::Blocks) => {
            let mut solver = BlockSolver::new(budget);
            let lam = solver.lambda(g)?.value;
            let mut vertices = Vec::new();
            for v in 0..g.n() {
                if solver.lambda(&g.remove_vertex(v).0)?.value < lam {
                    vertices.push(v);
                }
            }
            json!({ "vertices": vertices })
        }
        (Task::Gamma, _) => to(&gamma_exact(g, budget)?),
        (Task::Omega, _) => to(&omega_exact(g)),
        (Task::Lpt, _) => to(&lpt_exact(g, budget)?),
        (Task::Lct, _) => to(&lct_exact(g, budget)?),
        (Task::CliqueSingleton, _) => json!({ "vertices": clique_singleton_transversal(g) }),
    };
    Ok(json!({ "task": task, "method": method, "result": result }))
}

fn to<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

/// What `build` produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BuildOutcome {
    pub summary: String,
    pub n: usize,
    pub m: usize,
    pub out: Option<PathBuf>,
}

fn formulas(a: &BuildArgs) -> Result<(Vec<CnfFormula>, Vec<String>), CliError> {
    let paths = match (&a.manifest, a.cnfs.is_empty()) {
        (Some(_), false) => return Err(CliError::Usage("give either --cnfs or --manifest, not both".into())),
        (Some(m), true) => manifest_paths(m)?,
        (None, false) => a.cnfs.clone(),
        (None, true) => return Err(CliError::Usage("this target needs --cnfs or --manifest".into())),
    };
    let fs = paths.iter().map(|p| read_cnf(p)).collect::<Result<Vec<_>, _>>()?;
    Ok((fs, paths.iter().map(|p| p.display().to_string()).collect()))
}

fn write_graph_only(g: &Graph, out: &Option<PathBuf>) -> Result<(), CliError> {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.display().to_string(), source })?;
        io::write_graph(g, dir.join("graph.json"))?;
    }
    Ok(())
}

pub fn build(a: &BuildArgs, budget: Budget) -> Result<BuildOutcome, CliError> {
    let plain = |g: &Graph, summary: String| BuildOutcome { summary, n: g.n(), m: g.edge_count(), out: a.out.clone() };
    match a.target {
        Target::Wz => {
            let g = build_wz();
            write_graph_only(&g, &a.out)?;
            Ok(plain(&g, "Walther-Zamfirescu graph, longest path 9".into()))
        }
        Target::WzPaths => {
            if a.kt == 0 || a.kl == 0 || a.kr == 0 {
                return Err(CliError::Usage("--kt, --kl and --kr must be at least 1".into()));
            }
            let g = build_wz_paths(a.kt, a.kl, a.kr)?;
            let lam = lambda_exact(&g, budget)?.value;
            write_graph_only(&g, &a.out)?;
            Ok(plain(&g, format!("pendant paths ({}, {}, {}): longest path {lam}", a.kt, a.kl, a.kr)))
        }
        Target::PathGadget => {
            let path = a.cnf.as_ref().ok_or_else(|| CliError::Usage("path-gadget needs --cnf".into()))?;
            let gd = build_path_gadget(&read_cnf(path)?, budget)?;
            let lam = gd.require_certified()?.lambda;
            write_graph_only(gd.graph(), &a.out)?;
            Ok(plain(gd.graph(), format!("path gadget: longest path {lam} (class {})", gd.class_k())))
        }
        Target::ParityGallai | Target::ParityLpt | Target::ParityLct | Target::ParityClique => {
            let (fs, sources) = formulas(a)?;
            let parity = make_parity_instance(fs)?;
            let inst = match a.target {
                Target::ParityGallai => build_theta2_instance(&parity, budget)?,
                Target::ParityLpt => {
                    let (h, x) = match &a.host {
                        Some(p) => {
                            let h = read_graph(p)?;
                            let x = a.x.ok_or_else(|| CliError::Usage("--host needs --x".into()))?;
                            (h, x)
                        }
                        None => {
                            let h = build_wz();
                            let x = a.x.unwrap_or_else(|| h.role("v_T").expect("golden graph has v_T"));
                            (h, x)
                        }
                    };
                    build_lpt_instance(&h, x, &parity, budget)?
                }
                Target::ParityLct => {
                    let (h, e) = match &a.host {
                        Some(p) => (read_graph(p)?, a.edge.ok_or_else(|| CliError::Usage("--host needs --edge".into()))?),
                        None => (two_triangles(), a.edge.unwrap_or((0, 1))),
                    };
                    build_lct_instance(&h, e, &parity, budget)?
                }
                _ => build_clique_parity_instance(&parity)?,
            };
            if let Some(dir) = &a.out {
                write_bundle(dir, &inst, &sources)?;
            }
            Ok(BuildOutcome { summary: inst.predicted.summary.clone(), n: inst.graph.n(), m: inst.graph.edge_count(), out: a.out.clone() })
        }
    }
}

pub fn verify(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport, CliError> {
    run_suite(suite, opts)
}

/// Parses `U,V` or `U-V`.
pub fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once([',', '-']).ok_or_else(|| format!("expected U,V but got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// Positive node limit.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    match s.trim().parse::<u64>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}
