//! Undirected simple graphs with role labels, and the composition operators
//! every construction in this crate is built from.
//!
//! A [`Graph`] is immutable once built. Every operator returns a fresh value
//! together with enough id bookkeeping for callers to find the vertices they
//! care about afterwards; named vertices are additionally tracked through the
//! role map, which is kept injective by prefixing the roles of every graph
//! that gets merged into another one.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub mod io;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("role {0:?} assigned more than once")]
    DuplicateRole(String),
    #[error("role {0:?} is empty or contains whitespace")]
    InvalidRole(String),
    #[error("cannot identify vertex {0} with itself")]
    IdentifySame(usize),
    #[error("edge ({0}, {1}) is not present")]
    EdgeAbsent(usize, usize),
    #[error("path length must be at least 1")]
    ZeroLength,
    #[error("graph is not connected")]
    Disconnected,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted. Roles are string names
/// attached to vertices (`"T"`, `"x"`, `"odd:v"`, ...); a role names exactly
/// one vertex, a vertex may carry several roles.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<String, usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edges.len())
            .field("labels", &self.labels)
            .finish()
    }
}

fn check_role(role: &str) -> Result<(), GraphError> {
    if role.is_empty() || role.chars().any(char::is_whitespace) {
        return Err(GraphError::InvalidRole(role.to_string()));
    }
    Ok(())
}

impl Graph {
    /// Builds a graph from an edge list. Edges are normalized to `u < v`
    /// and repeated edges are collapsed into one.
    pub fn from_edge_list<I, S>(n: usize, edges: &[(usize, usize)], labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();

        let mut map = BTreeMap::new();
        for (role, v) in labels {
            let role = role.into();
            check_role(&role)?;
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if map.insert(role.clone(), v).is_some() {
                return Err(GraphError::DuplicateRole(role));
            }
        }
        Ok(Self::assemble(n, norm, map))
    }

    fn assemble(n: usize, edges: Vec<(usize, usize)>, labels: BTreeMap<String, usize>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj, labels }
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::assemble(n, Vec::new(), BTreeMap::new())
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::assemble(n, edges, BTreeMap::new())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::assemble(n, edges, BTreeMap::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::assemble(n, edges, BTreeMap::new())
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edge_list(10, &edges, std::iter::empty::<(String, usize)>())
            .expect("petersen edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> &BTreeMap<String, usize> {
        &self.labels
    }

    pub fn role(&self, role: &str) -> Option<usize> {
        self.labels.get(role).copied()
    }

    pub fn roles_of(&self, v: usize) -> impl Iterator<Item = &str> {
        self.labels
            .iter()
            .filter(move |(_, &x)| x == v)
            .map(|(r, _)| r.as_str())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Returns a copy with `role` pointing at `v`, replacing any previous
    /// assignment of that role.
    pub fn with_role(&self, role: impl Into<String>, v: usize) -> Result<Self, GraphError> {
        let role = role.into();
        check_role(&role)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.labels.insert(role, v);
        Ok(g)
    }

    /// Returns a copy with the given extra edges.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut all = self.edges.clone();
        all.extend_from_slice(extra);
        Self::from_edge_list(self.n, &all, self.labels.clone())
    }

    /// Returns a copy without edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let e = (u.min(v), u.max(v));
        let Ok(pos) = self.edges.binary_search(&e) else {
            return Err(GraphError::EdgeAbsent(e.0, e.1));
        };
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Self::assemble(self.n, edges, self.labels.clone()))
    }

    /// Induced subgraph on the vertices with `keep[v]`, renumbered in
    /// increasing order. Returns the subgraph and, for each old vertex, its
    /// new id. Roles of dropped vertices are dropped.
    pub fn induced(&self, keep: &[bool]) -> (Self, Vec<Option<usize>>) {
        assert_eq!(keep.len(), self.n);
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let labels = self
            .labels
            .iter()
            .filter_map(|(r, &v)| Some((r.clone(), map[v]?)))
            .collect();
        (Self::assemble(next, edges, labels), map)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> (Self, Vec<Option<usize>>) {
        let mut keep = vec![true; self.n];
        keep[v] = false;
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }
}

fn prefixed(prefix: &str, role: &str) -> String {
    if prefix.is_empty() {
        role.to_string()
    } else {
        format!("{prefix}:{role}")
    }
}

/// Disjoint union `a ⊔ b`. The vertices of `b` are shifted by `a.n()` and
/// its roles are renamed to `"{prefix}:{role}"`. Returns the union and the
/// new id of every vertex of `b`.
pub fn disjoint_union(a: &Graph, b: &Graph, prefix: &str) -> Result<(Graph, Vec<usize>), GraphError> {
    let off = a.n;
    let map: Vec<usize> = (0..b.n).map(|v| v + off).collect();
    let mut edges = a.edges.clone();
    edges.extend(b.edges.iter().map(|&(u, v)| (u + off, v + off)));
    let mut labels = a.labels.clone();
    for (role, &v) in &b.labels {
        let name = prefixed(prefix, role);
        if labels.insert(name.clone(), v + off).is_some() {
            return Err(GraphError::DuplicateRole(name));
        }
    }
    Ok((Graph::assemble(a.n + b.n, edges, labels), map))
}

/// Graph join: disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph, prefix: &str) -> Result<(Graph, Vec<usize>), GraphError> {
    let (u, map) = disjoint_union(a, b, prefix)?;
    let mut extra = Vec::with_capacity(a.n * b.n);
    for x in 0..a.n {
        for &y in &map {
            extra.push((x, y));
        }
    }
    Ok((u.with_edges(&extra)?, map))
}

/// Result of [`identify_vertices`].
#[derive(Debug, Clone)]
pub struct Identified {
    pub graph: Graph,
    /// New id of every old vertex.
    pub map: Vec<usize>,
    /// The merged vertex (the smaller of the two ids).
    pub merged: usize,
    /// `u` and `v` were adjacent; the resulting loop was dropped.
    pub dropped_loop: bool,
    /// Number of parallel edges that were collapsed.
    pub collapsed_edges: usize,
}

/// Merges `u` and `v` into one vertex that keeps the smaller id; vertices
/// above the removed id shift down by one. The merged vertex carries the
/// edges and roles of both.
pub fn identify_vertices(g: &Graph, u: usize, v: usize) -> Result<Identified, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::IdentifySame(u));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let map: Vec<usize> = (0..g.n)
        .map(|x| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect();
    let mut dropped_loop = false;
    let mut edges = Vec::with_capacity(g.edges.len());
    for &(a, b) in &g.edges {
        let (a, b) = (map[a], map[b]);
        if a == b {
            dropped_loop = true;
            continue;
        }
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    let collapsed_edges = before - edges.len();
    let labels = g.labels.iter().map(|(r, &x)| (r.clone(), map[x])).collect();
    Ok(Identified {
        graph: Graph::assemble(g.n - 1, edges, labels),
        map,
        merged: keep,
        dropped_loop,
        collapsed_edges,
    })
}

/// Appends a pendant path of `len` new vertices hanging from `at`.
/// New vertices get ids `n..n+len`, in order away from `at`; returns the
/// graph and the id of the far tip.
pub fn append_path(g: &Graph, at: usize, len: usize) -> Result<(Graph, usize), GraphError> {
    g.check_vertex(at)?;
    if len == 0 {
        return Err(GraphError::ZeroLength);
    }
    let mut edges = g.edges.clone();
    let mut prev = at;
    for i in 0..len {
        edges.push((prev, g.n + i));
        prev = g.n + i;
    }
    edges.sort_unstable();
    Ok((Graph::assemble(g.n + len, edges, g.labels.clone()), prev))
}

/// Connects `a` and `b` with a new internal path of `len` edges.
pub fn connect_with_path(g: &Graph, a: usize, b: usize, len: usize) -> Result<Graph, GraphError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if len == 0 {
        return Err(GraphError::ZeroLength);
    }
    if a == b {
        return Err(GraphError::IdentifySame(a));
    }
    if len == 1 {
        return g.with_edges(&[(a, b)]);
    }
    let (h, tip) = append_path(g, a, len - 1)?;
    h.with_edges(&[(tip, b)])
}

/// Glues `h` onto `g` by identifying `h`'s vertex `hv` with `g`'s vertex
/// `at`. Vertices of `g` keep their ids. Returns the graph and the new id of
/// every vertex of `h`.
pub fn attach_at(g: &Graph, at: usize, h: &Graph, hv: usize, prefix: &str) -> Result<(Graph, Vec<usize>), GraphError> {
    g.check_vertex(at)?;
    h.check_vertex(hv)?;
    let (u, map) = disjoint_union(g, h, prefix)?;
    let id = identify_vertices(&u, at, map[hv])?;
    let map = map.into_iter().map(|x| id.map[x]).collect();
    Ok((id.graph, map))
}

/// Deletes edge `e` and inserts a copy of `h` whose vertex `hv` is
/// identified with the smaller endpoint of `e` and `hw` with the larger.
/// Vertices of `g` keep their ids.
pub fn replace_edge(
    g: &Graph,
    e: (usize, usize),
    h: &Graph,
    hv: usize,
    hw: usize,
    prefix: &str,
) -> Result<(Graph, Vec<usize>), GraphError> {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    if hv == hw {
        return Err(GraphError::IdentifySame(hv));
    }
    let stripped = g.without_edge(a, b)?;
    let (u, map) = disjoint_union(&stripped, h, prefix)?;
    let first = identify_vertices(&u, a, map[hv])?;
    let map: Vec<usize> = map.into_iter().map(|x| first.map[x]).collect();
    let second = identify_vertices(&first.graph, b, map[hw])?;
    let map = map.into_iter().map(|x| second.map[x]).collect();
    Ok((second.graph, map))
}
