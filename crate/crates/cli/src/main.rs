use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gallai_cli::commands::{self, parse_budget, parse_edge, BuildArgs, Target, Task};
use gallai_cli::suites::{Suite, SuiteOptions};
use gallai_cli::CliError;
use gallai_core::solvers::DEFAULT_NODE_LIMIT;
use gallai_core::{Budget, Method};

#[derive(Debug, Parser)]
#[command(name = "gallai", version, about = "Longest-path hardness gadgets: build, solve, verify")]
struct Cli {
    /// Search-node limit per exact computation.
    #[arg(long, global = true, env = "GALLAI_BUDGET", value_parser = parse_budget, default_value_t = DEFAULT_NODE_LIMIT)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one task exactly on a graph file (edge list or JSON).
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum)]
        task: Task,
        #[arg(long, value_enum, default_value = "naive")]
        method: MethodArg,
    },
    /// Build a graph or reduction instance and print its predicted summary.
    Build {
        #[arg(value_enum)]
        target: Target,
        /// Output directory for graph.json (and manifest.json).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        kt: usize,
        #[arg(long, default_value_t = 1)]
        kl: usize,
        #[arg(long, default_value_t = 1)]
        kr: usize,
        /// DIMACS formula for `path-gadget`.
        #[arg(long)]
        cnf: Option<PathBuf>,
        /// Formula sequence for the parity targets.
        #[arg(long, num_args = 1..)]
        cnfs: Vec<PathBuf>,
        /// File listing the formula sequence.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Host graph for `parity-lpt` and `parity-lct`.
        #[arg(long)]
        host: Option<PathBuf>,
        /// Host vertex for `parity-lpt`.
        #[arg(long)]
        x: Option<usize>,
        /// Host edge `U,V` for `parity-lct`.
        #[arg(long, value_parser = parse_edge)]
        edge: Option<(usize, usize)>,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest pendant length for `pendant-paths`.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        /// Number of random instances.
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum MethodArg {
    Naive,
    Blocks,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Naive => Method::Naive,
            MethodArg::Blocks => Method::Blocks,
        }
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let budget = Budget::new(cli.budget);
    match cli.command {
        Command::Solve { graph, task, method } => {
            let g = commands::read_graph(&graph)?;
            let v = commands::solve(&g, task, method.into(), budget)?;
            emit(&serde_json::to_string_pretty(&v).expect("json"));
            Ok(0)
        }
        Command::Build { target, out, kt, kl, kr, cnf, cnfs, manifest, host, x, edge } => {
            let a = BuildArgs { target, out, kt, kl, kr, cnf, cnfs, manifest, host, x, edge };
            let o = commands::build(&a, budget)?;
            emit(&o.summary);
            if let Some(dir) = &o.out {
                eprintln!("wrote {} ({} vertices, {} edges)", dir.display(), o.n, o.m);
            }
            Ok(0)
        }
        Command::Verify { suite, seed, max_k, count } => {
            let r = commands::verify(suite, &SuiteOptions { seed, max_k, count, budget })?;
            emit(&serde_json::to_string_pretty(&r).expect("json"));
            eprintln!("{}: {}/{} checks passed", r.suite, r.passed(), r.checks.len());
            Ok(if r.pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
