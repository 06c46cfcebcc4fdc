//! Graph file formats.
//!
//! JSON: `{"n": 3, "edges": [[0,1],[1,2]], "labels": {"T": 0}}`.
//!
//! Edge-list text: a header line `n m`, then `m` lines `u v`, then an
//! optional trailing section of `# role id` lines. Other `#` lines are
//! comments.
//!
//! Both writers are byte-deterministic: edges are sorted, roles are sorted.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use super::{Graph, GraphError};

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, deserialize_with = "unique_labels")]
    labels: BTreeMap<String, usize>,
}

fn unique_labels<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, usize>, D::Error> {
    struct Unique;
    impl<'de> Visitor<'de> for Unique {
        type Value = BTreeMap<String, usize>;
        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map from role to vertex id")
        }
        fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some((k, v)) = access.next_entry::<String, usize>()? {
                if out.contains_key(&k) {
                    return Err(serde::de::Error::custom(format!("duplicate role {k:?}")));
                }
                out.insert(k, v);
            }
            Ok(out)
        }
    }
    d.deserialize_map(Unique)
}

pub fn to_json(g: &Graph) -> String {
    let file = GraphFile {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        labels: g.labels().clone(),
    };
    let mut s = serde_json::to_string(&file).expect("graph serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Graph, GraphError> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let edges: Vec<_> = file.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::from_edge_list(file.n, &edges, file.labels)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    for (role, v) in g.labels() {
        s.push_str(&format!("# {role} {v}\n"));
    }
    s
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(lineno: usize, tok: (usize, &str)) -> Result<usize, GraphError> {
    tok.1
        .parse()
        .map_err(|_| parse_err(lineno, tok.0, format!("expected a non-negative integer, found {:?}", tok.1)))
}

pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(String, usize)> = Vec::new();
    let mut seen = BTreeMap::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = raw.trim_start();
        if let Some(rest) = trimmed.strip_prefix('#') {
            let offset = raw.len() - rest.len();
            let toks: Vec<_> = tokens(rest).into_iter().map(|(c, t)| (c + offset, t)).collect();
            if toks.len() == 2 && toks[1].1.chars().all(|c| c.is_ascii_digit()) {
                let v = number(lineno, toks[1])?;
                let role = toks[0].1.to_string();
                if seen.insert(role.clone(), lineno).is_some() {
                    return Err(parse_err(lineno, toks[0].0, format!("duplicate role {role:?}")));
                }
                labels.push((role, v));
            }
            continue;
        }
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 2 {
            let col = toks.get(2).map_or(1, |t| t.0);
            return Err(parse_err(lineno, col, "expected exactly two integers"));
        }
        let a = number(lineno, toks[0])?;
        let b = number(lineno, toks[1])?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                for (x, tok) in [(a, toks[0]), (b, toks[1])] {
                    if x >= n {
                        return Err(parse_err(lineno, tok.0, format!("vertex {x} out of range (n = {n})")));
                    }
                }
                if a == b {
                    return Err(parse_err(lineno, toks[0].0, format!("self-loop at {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), 1, "missing `n m` header"));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            1,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges, labels)
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

/// Reads a graph; `.json` files are parsed as JSON, anything else as an
/// edge list.
pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    if is_json(path) {
        from_json(&text)
    } else {
        from_edge_list(&text)
    }
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<(), GraphError> {
    let path = path.as_ref();
    let text = if is_json(path) { to_json(g) } else { to_edge_list(g) };
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = Graph::path(3).with_role("end", 2).unwrap();
        let text = to_json(&g);
        assert_eq!(text, "{\"n\":3,\"edges\":[[0,1],[1,2]],\"labels\":{\"end\":2}}\n");
        assert_eq!(from_json(&text).unwrap(), g);
    }

    #[test]
    fn json_duplicate_role_is_a_parse_error() {
        let text = r#"{"n":2,"edges":[[0,1]],"labels":{"a":0,"a":1}}"#;
        match from_json(text) {
            Err(GraphError::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(4).with_role("T", 1).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n# T 1\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_positions() {
        match from_edge_list("3 1\n0 x\n") {
            Err(GraphError::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match from_edge_list("3 1\n0 5\n") {
            Err(GraphError::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(from_edge_list("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(
            from_edge_list("2 1\n0 1\n# a 0\n# a 1\n"),
            Err(GraphError::Parse { line: 4, .. })
        ));
        assert!(matches!(from_edge_list(""), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn comments_are_ignored() {
        let g = from_edge_list("# a small graph\n2 1\n0 1\n").unwrap();
        assert_eq!(g, Graph::path(2));
    }
}
