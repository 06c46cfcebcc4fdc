//! Nonadaptive query machines for Gallai-vertex existence and singleton
//! maximum-clique transversals.
//!
//! The whole query list is fixed by the input size before any answer is
//! seen: for each of the `n + 1` graphs `G, G - 0, ..., G - (n-1)` and each
//! `k` in `1..=n`, ask whether the graph has a path (or clique) on at
//! least `k` vertices. That is `(n + 1)·n` queries. The answers are then
//! read off per graph and compared.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};
use crate::solvers::{lambda_exact, omega_exact, BlockSolver, Budget, SolveError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryKind {
    Path,
    Clique,
}

/// Which solver answers path queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Naive,
    Blocks,
}

/// `G` itself or `G - v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphId {
    Whole,
    Minus(usize),
}

/// "Does `graph` contain a path (clique) on at least `k` vertices?"
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub graph: GraphId,
    pub k: usize,
}

/// The query list for an `n`-vertex input; path and clique tables share
/// it. Depends on `n` only.
pub fn query_table(n: usize) -> Vec<Query> {
    let graphs = std::iter::once(GraphId::Whole).chain((0..n).map(GraphId::Minus));
    graphs.flat_map(|graph| (1..=n).map(move |k| Query { graph, k })).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Derived {
    pub graph: GraphId,
    /// `λ` (path queries) or `ω` (clique queries); `None` for a path query
    /// on the empty graph.
    pub value: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleTranscript {
    pub kind: QueryKind,
    pub n: usize,
    pub queries: Vec<Query>,
    pub answers: Vec<bool>,
    pub derived: Vec<Derived>,
    /// Vertices `v` with a smaller value on `G - v` than on `G`.
    pub drops: Vec<usize>,
    pub verdict: bool,
}

/// Values and verdict from the answers alone.
pub fn decide_from_answers(kind: QueryKind, queries: &[Query], answers: &[bool]) -> (Vec<Derived>, Vec<usize>, bool) {
    assert_eq!(queries.len(), answers.len());
    let mut yes: Vec<(GraphId, usize)> = Vec::new();
    for (q, &a) in queries.iter().zip(answers) {
        match yes.last_mut() {
            Some((g, c)) if *g == q.graph => *c += usize::from(a),
            _ => yes.push((q.graph, usize::from(a))),
        }
    }
    let value = |c: usize| match kind {
        QueryKind::Path => c.checked_sub(1),
        QueryKind::Clique => Some(c),
    };
    let whole = yes.iter().find(|(g, _)| *g == GraphId::Whole).map_or(0, |&(_, c)| c);
    let drops: Vec<usize> = yes
        .iter()
        .filter_map(|&(g, c)| match g {
            GraphId::Minus(v) if c < whole => Some(v),
            _ => None,
        })
        .collect();
    let derived = yes.iter().map(|&(graph, c)| Derived { graph, value: value(c) }).collect();
    let verdict = !drops.is_empty();
    (derived, drops, verdict)
}

fn run(
    kind: QueryKind,
    g: &Graph,
    mut solve: impl FnMut(&Graph) -> Result<Option<usize>, SolveError>,
) -> Result<OracleTranscript, SolveError> {
    let n = g.n();
    let queries = query_table(n);
    // One solve per graph; the value answers all its queries.
    let mut memo: HashMap<GraphId, Option<usize>> = HashMap::new();
    let mut answers = Vec::with_capacity(queries.len());
    for q in &queries {
        let value = match memo.get(&q.graph) {
            Some(&v) => v,
            None => {
                let v = match q.graph {
                    GraphId::Whole => solve(g)?,
                    GraphId::Minus(x) => solve(&g.remove_vertex(x).0)?,
                };
                memo.insert(q.graph, v);
                v
            }
        };
        // Path values count edges; queries count vertices.
        let vertices = match kind {
            QueryKind::Path => value.map_or(0, |l| l + 1),
            QueryKind::Clique => value.unwrap_or(0),
        };
        answers.push(vertices >= q.k);
    }
    let (derived, drops, verdict) = decide_from_answers(kind, &queries, &answers);
    Ok(OracleTranscript { kind, n, queries, answers, derived, drops, verdict })
}

/// Decides whether `g` has a Gallai vertex through the path-query table.
pub fn theta2_decide_gallai(g: &Graph, method: Method, budget: Budget) -> Result<OracleTranscript, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let mut blocks = BlockSolver::new(budget);
    run(QueryKind::Path, g, |h| {
        if h.n() == 0 {
            return Ok(None);
        }
        let r = match method {
            Method::Naive => lambda_exact(h, budget)?,
            Method::Blocks => blocks.lambda(h)?,
        };
        Ok(Some(r.value))
    })
}

/// Decides whether one vertex lies in every maximum clique of `g` through
/// the clique-query table.
pub fn theta2_decide_clique_singleton(g: &Graph) -> OracleTranscript {
    run(QueryKind::Clique, g, |h| Ok(Some(if h.n() == 0 { 0 } else { omega_exact(h).value })))
        .expect("clique solves do not fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{clique_singleton_transversal, gallai_vertices};

    fn b() -> Budget {
        Budget::default()
    }

    fn g(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, es, std::iter::empty::<(String, usize)>()).unwrap()
    }

    #[test]
    fn table_shape() {
        for n in 0..8 {
            assert_eq!(query_table(n).len(), (n + 1) * n);
        }
        let t = theta2_decide_gallai(&Graph::path(4), Method::Naive, b()).unwrap();
        assert_eq!(t.queries.len(), 20);
        assert!(t.verdict);
    }

    #[test]
    fn answers_are_monotone_and_verdict_matches() {
        for (h, yes) in [(Graph::path(1), true), (Graph::cycle(5), true), (Graph::petersen(), true), (crate::gadgets::build_wz(), false)] {
            for m in [Method::Naive, Method::Blocks] {
                let t = theta2_decide_gallai(&h, m, b()).unwrap();
                assert_eq!(t.verdict, yes);
                assert_eq!(t.verdict, !gallai_vertices(&h, b()).unwrap().is_empty());
                for chunk in t.answers.chunks(h.n()) {
                    assert!(chunk.windows(2).all(|w| w[0] >= w[1]));
                }
                assert_eq!(decide_from_answers(t.kind, &t.queries, &t.answers).2, t.verdict);
            }
        }
    }

    #[test]
    fn clique_examples() {
        let k3_pendant = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let bridged = g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        for (h, yes) in [(k3_pendant, true), (bridged, false)] {
            let t = theta2_decide_clique_singleton(&h);
            assert_eq!(t.verdict, yes);
            assert_eq!(t.drops, clique_singleton_transversal(&h));
            assert_eq!(t.derived[0].value, Some(3));
        }
    }

    #[test]
    fn disconnected_input_is_rejected() {
        assert!(matches!(
            theta2_decide_gallai(&Graph::empty(2), Method::Naive, b()),
            Err(SolveError::Graph(GraphError::Disconnected))
        ));
    }

    #[test]
    fn transcript_serializes() {
        let t = theta2_decide_gallai(&Graph::path(2), Method::Naive, b()).unwrap();
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["queries"][0], serde_json::json!({"graph": "whole", "k": 1}));
        assert_eq!(json["queries"][2], serde_json::json!({"graph": {"minus": 0}, "k": 1}));
    }
}
