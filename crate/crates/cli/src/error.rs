use gallai_core::{CnfError, GadgetError, GraphError, SolveError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl CliError {
    /// 3 for an exhausted node budget, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solve(SolveError::BudgetExceeded { .. })
            | CliError::Gadget(GadgetError::Solve(SolveError::BudgetExceeded { .. })) => 3,
            _ => 2,
        }
    }
}
