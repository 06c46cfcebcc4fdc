//! Longest cycles: value, enumeration, lct, and the weighted quotient.

use std::collections::BTreeMap;

use super::bits::{adjacency, with_width, Bits};
use super::{check_size, transversal, vertex_sets, Budget, Measure, Meter, SolveError, SolveResult, TransversalResult};
use crate::blocks::biconnected_components;
use crate::graph::{Graph, GraphError};

/// A graph whose edges carry nonnegative integer lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    base: Graph,
    weight: BTreeMap<(usize, usize), usize>,
}

impl WeightedGraph {
    /// Every edge gets weight 1.
    pub fn unit(base: Graph) -> Self {
        Self::from_fn(base, |_, _| 1)
    }

    /// Edge `{u, v}` with `u < v` gets weight `f(u, v)`.
    pub fn from_fn(base: Graph, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let weight = base.edges().iter().map(|&(u, v)| ((u, v), f(u, v))).collect();
        Self { base, weight }
    }

    pub fn with_weight(mut self, u: usize, v: usize, w: usize) -> Result<Self, GraphError> {
        let e = (u.min(v), u.max(v));
        match self.weight.get_mut(&e) {
            Some(x) => *x = w,
            None => return Err(GraphError::EdgeAbsent(e.0, e.1)),
        }
        Ok(self)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// # Panics
    /// If `{u, v}` is not an edge.
    pub fn weight(&self, u: usize, v: usize) -> usize {
        self.weight[&(u.min(v), u.max(v))]
    }
}

/// Rotates `c` to start at its minimum and orients it so the second
/// vertex is smaller than the last.
pub(crate) fn canonical_cycle(c: &[usize]) -> Vec<usize> {
    let k = c.len();
    let i = (0..k).min_by_key(|&i| c[i]).unwrap_or(0);
    let mut out: Vec<usize> = (0..k).map(|j| c[(i + j) % k]).collect();
    if k > 2 && out[1] > out[k - 1] {
        out[1..].reverse();
    }
    out
}

struct CycleKernel<'a, const W: usize> {
    adj: &'a [Bits<W>],
    meter: &'a Meter,
    path: Vec<usize>,
}

impl<const W: usize> CycleKernel<'_, W> {
    fn reach(&self, end: usize, avail: &Bits<W>) -> Bits<W> {
        let mut seen = Bits::EMPTY;
        let mut frontier = self.adj[end].and(avail);
        while !frontier.is_empty() {
            seen = seen.or(&frontier);
            let mut next = Bits::EMPTY;
            for v in frontier.iter() {
                next = next.or(&self.adj[v]);
            }
            frontier = next.and(avail).minus(&seen);
        }
        seen
    }

    /// Upper bound on the length of a cycle through `path[0]` extending the
    /// current path: the path can only grow through vertices reachable from
    /// its end, and must return to a neighbor of the start.
    fn bound(&self, u: usize, avail: &Bits<W>) -> usize {
        let s = self.path[0];
        let reach = self.reach(u, avail);
        let mut closing = reach;
        closing.insert(u);
        if !self.adj[s].intersects(&closing) {
            return 0;
        }
        self.path.len() + reach.len()
    }

    /// Visits every cycle whose minimum vertex is `path[0]`. `best` holds
    /// the value search threshold, `target` switches to enumeration of
    /// cycles of exactly that length.
    fn search(
        &mut self,
        u: usize,
        avail: Bits<W>,
        best: &mut (usize, Vec<usize>),
        target: Option<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), ()> {
        if !self.meter.tick() {
            return Err(());
        }
        let len = self.path.len();
        let s = self.path[0];
        if len >= 3 && self.adj[u].contains(s) {
            match target {
                None if len > best.0 => *best = (len, self.path.clone()),
                Some(t) if len == t && self.path[1] < u => out.push(self.path.clone()),
                _ => {}
            }
        }
        let ub = self.bound(u, &avail);
        match target {
            None if ub <= best.0 => return Ok(()),
            Some(t) if ub < t || len >= t => return Ok(()),
            _ => {}
        }
        for w in self.adj[u].and(&avail).iter() {
            let mut rest = avail;
            rest.remove(w);
            self.path.push(w);
            let r = self.search(w, rest, best, target, out);
            self.path.pop();
            r?;
        }
        Ok(())
    }
}

/// Runs the cycle search inside one block (given as a relabeled graph).
fn block_cycles<const W: usize>(
    g: &Graph,
    meter: &Meter,
    floor: usize,
    target: Option<usize>,
) -> Result<((usize, Vec<usize>), Vec<Vec<usize>>), ()> {
    let adj = adjacency::<W>(g);
    let mut k = CycleKernel { adj: &adj, meter, path: Vec::new() };
    let mut best = (floor, Vec::new());
    let mut out = Vec::new();
    for s in 0..g.n() {
        let avail = Bits::<W>::from_iter(s + 1..g.n());
        k.path.clear();
        k.path.push(s);
        k.search(s, avail, &mut best, target, &mut out)?;
    }
    Ok((best, out))
}

/// Blocks with at least three vertices, as induced subgraphs with their
/// original vertex ids.
fn cyclic_blocks(g: &Graph) -> Vec<(Graph, Vec<usize>)> {
    let alive = vec![true; g.n()];
    let mut blocks = biconnected_components(g, &alive);
    blocks.sort();
    blocks
        .into_iter()
        .filter(|b| b.len() >= 3)
        .map(|b| {
            let mut keep = vec![false; g.n()];
            for &v in &b {
                keep[v] = true;
            }
            (g.induced(&keep).0, b)
        })
        .collect()
}

/// `γ(g)` with one longest cycle as witness. Every cycle lies inside one
/// block, so each block is searched separately.
pub fn gamma_exact(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    check_size(g.n())?;
    let meter = Meter::new(budget);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (h, ids) in cyclic_blocks(g) {
        let floor = best.as_ref().map_or(2, |b| b.0);
        if h.n() <= floor {
            continue;
        }
        let ((len, cyc), _) = with_width!(h.n(), block_cycles(&h, &meter, floor, None))
            .map_err(|()| meter.exceeded(best.as_ref().map(|b| b.0)))?;
        if !cyc.is_empty() {
            best = Some((len, cyc.iter().map(|&v| ids[v]).collect()));
        }
    }
    let (value, cycle) = best.ok_or(SolveError::Acyclic)?;
    Ok(SolveResult {
        measure: Measure::Gamma,
        value,
        witnesses: vec![canonical_cycle(&cycle)],
        exhausted: false,
        nodes: meter.used(),
    })
}

/// All longest cycles of `g` in canonical form, sorted.
pub fn enumerate_longest_cycles(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    let gamma = gamma_exact(g, budget)?;
    let meter = Meter::new(budget);
    let mut all = Vec::new();
    for (h, ids) in cyclic_blocks(g) {
        if h.n() < gamma.value {
            continue;
        }
        let (_, found) = with_width!(h.n(), block_cycles(&h, &meter, 0, Some(gamma.value)))
            .map_err(|()| meter.exceeded(Some(gamma.value)))?;
        all.extend(found.into_iter().map(|c| c.into_iter().map(|v| ids[v]).collect::<Vec<_>>()));
    }
    let mut witnesses: Vec<Vec<usize>> = all.iter().map(|c| canonical_cycle(c)).collect();
    witnesses.sort();
    Ok(SolveResult {
        measure: Measure::Gamma,
        value: gamma.value,
        witnesses,
        exhausted: true,
        nodes: gamma.nodes + meter.used(),
    })
}

/// Minimum longest cycle transversal over the full family of longest
/// cycles.
pub fn lct_exact(g: &Graph, budget: Budget) -> Result<TransversalResult, SolveError> {
    let cycles = enumerate_longest_cycles(g, budget)?;
    transversal(vertex_sets(&cycles.witnesses), &Meter::new(budget))
}

/// Maximum total weight of a cycle of `wg`, by enumerating every cycle of
/// the base graph.
pub fn gamma_via_quotient(wg: &WeightedGraph) -> Result<usize, SolveError> {
    let g = wg.base();
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut on_path = vec![false; n];

    fn grow(
        wg: &WeightedGraph,
        s: usize,
        u: usize,
        depth: usize,
        total: usize,
        on_path: &mut [bool],
        best: &mut Option<usize>,
    ) {
        for &w in wg.base().neighbors(u) {
            if w == s && depth >= 3 {
                let c = total + wg.weight(u, s);
                if best.is_none_or(|b| c > b) {
                    *best = Some(c);
                }
            }
            if w > s && !on_path[w] {
                on_path[w] = true;
                grow(wg, s, w, depth + 1, total + wg.weight(u, w), on_path, best);
                on_path[w] = false;
            }
        }
    }

    for s in 0..n {
        on_path[s] = true;
        grow(wg, s, s, 1, 0, &mut on_path, &mut best);
        on_path[s] = false;
    }
    best.ok_or(SolveError::Acyclic)
}
