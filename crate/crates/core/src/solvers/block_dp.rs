//! Longest path by dynamic programming over the block-cut tree.
//!
//! A simple path meets every block in one contiguous subpath, and passes
//! from block to block only through cut vertices. Per block we tabulate
//! the longest path inside it, from each cut vertex into it, and between
//! each pair of its cut vertices; the tree DP then combines these tables.

use std::collections::HashMap;
use std::rc::Rc;

use super::paths::{lambda_exact, longest_from};
use super::{Budget, Measure, Meter, SolveError, SolveResult};
use crate::blocks::biconnected_components;
use crate::graph::Graph;

/// Largest block the per-block tables are computed for.
pub const MAX_BLOCK_VERTICES: usize = 256;

#[derive(Debug)]
struct BlockTables {
    inner: usize,
    /// `from[i]`: longest path in the block starting at cut `i`.
    from: Vec<usize>,
    /// `between[i][j]`: longest path in the block from cut `i` to cut `j`.
    between: Vec<Vec<usize>>,
}

/// A block relabeled to `0..k` in increasing id order, with the local ids
/// of its cut vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct BlockKey {
    k: usize,
    edges: Vec<(usize, usize)>,
    cuts: Vec<usize>,
}

/// Block-DP solver that remembers the tables of every block it has seen,
/// so repeated solves on graphs sharing blocks (such as `G` and all
/// `G - v`) reuse them.
#[derive(Debug)]
pub struct BlockSolver {
    budget: Budget,
    cache: HashMap<BlockKey, Rc<BlockTables>>,
}

impl BlockSolver {
    pub fn new(budget: Budget) -> Self {
        Self { budget, cache: HashMap::new() }
    }

    /// Number of distinct blocks tabulated so far.
    pub fn cached_blocks(&self) -> usize {
        self.cache.len()
    }

    fn tables(&mut self, key: BlockKey, meter: &mut u64) -> Result<Rc<BlockTables>, SolveError> {
        if let Some(t) = self.cache.get(&key) {
            return Ok(Rc::clone(t));
        }
        if key.k > MAX_BLOCK_VERTICES {
            return Err(SolveError::BlockTooLarge { size: key.k, limit: MAX_BLOCK_VERTICES });
        }
        let h = Graph::from_edge_list(key.k, &key.edges, std::iter::empty::<(String, usize)>())?;
        let inner = if key.k <= 2 {
            key.k - 1
        } else {
            let r = lambda_exact(&h, self.budget)?;
            *meter += r.nodes;
            r.value
        };
        let mut from = Vec::with_capacity(key.cuts.len());
        let mut between = Vec::with_capacity(key.cuts.len());
        for &c in &key.cuts {
            let m = Meter::new(self.budget);
            let (f, to) = longest_from(&h, c, &key.cuts, &m)?;
            *meter += m.used();
            from.push(f);
            between.push(to);
        }
        let t = Rc::new(BlockTables { inner, from, between });
        self.cache.insert(key, Rc::clone(&t));
        Ok(t)
    }

    /// `λ(g)`; disconnected graphs get the maximum over their components.
    /// The result carries the value only.
    pub fn lambda(&mut self, g: &Graph) -> Result<SolveResult, SolveError> {
        if g.n() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        let alive = vec![true; g.n()];
        let mut blocks = biconnected_components(g, &alive);
        blocks.sort();
        let mut blocks_of = vec![Vec::new(); g.n()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                blocks_of[v].push(i);
            }
        }
        let is_cut = |v: usize| blocks_of[v].len() > 1;

        let mut nodes = 0u64;
        let mut tables = Vec::with_capacity(blocks.len());
        // Local index of each vertex inside the block being keyed.
        let mut local = vec![usize::MAX; g.n()];
        for b in &blocks {
            for (i, &v) in b.iter().enumerate() {
                local[v] = i;
            }
            let mut edges = Vec::new();
            for &u in b {
                for &w in g.neighbors(u) {
                    if u < w && local[w] != usize::MAX && b.binary_search(&w).is_ok() {
                        edges.push((local[u], local[w]));
                    }
                }
            }
            edges.sort_unstable();
            let cuts: Vec<usize> = b.iter().filter(|&&v| is_cut(v)).map(|&v| local[v]).collect();
            tables.push(self.tables(BlockKey { k: b.len(), edges, cuts }, &mut nodes)?);
            for &v in b {
                local[v] = usize::MAX;
            }
        }

        // Cut vertices of block `i` in the order of its table rows.
        let cut_lists: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().copied().filter(|&v| is_cut(v)).collect()).collect();
        let row = |bi: usize, v: usize| cut_lists[bi].iter().position(|&c| c == v).expect("cut vertex of block");

        // Root every component of the block-cut forest at its first block.
        let mut parent_cut: Vec<Option<usize>> = vec![None; blocks.len()];
        let mut seen = vec![false; blocks.len()];
        let mut order = Vec::with_capacity(blocks.len());
        for root in 0..blocks.len() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(bi) = queue.pop_front() {
                order.push(bi);
                for &c in &cut_lists[bi] {
                    if Some(c) == parent_cut[bi] {
                        continue;
                    }
                    for &bj in &blocks_of[c] {
                        if !seen[bj] {
                            seen[bj] = true;
                            parent_cut[bj] = Some(c);
                            queue.push_back(bj);
                        }
                    }
                }
            }
        }

        // `d` below: longest path that starts at a block's parent cut vertex
        // and goes into the block's subtree. reach[c]: longest path starting at cut c
        // into the subtrees of c's child blocks.
        let mut reach = vec![0usize; g.n()];
        let mut top2 = vec![(0usize, 0usize); g.n()];
        let mut best = 0usize;
        for &bi in order.iter().rev() {
            let t = &tables[bi];
            best = best.max(t.inner);
            let children: Vec<(usize, usize)> = cut_lists[bi]
                .iter()
                .enumerate()
                .filter(|&(_, &c)| Some(c) != parent_cut[bi])
                .map(|(i, &c)| (i, reach[c]))
                .collect();
            for (a, &(i, ri)) in children.iter().enumerate() {
                best = best.max(t.from[i] + ri);
                for &(j, rj) in &children[a + 1..] {
                    best = best.max(t.between[i][j] + ri + rj);
                }
            }
            if let Some(c) = parent_cut[bi] {
                let p = row(bi, c);
                let mut d = t.from[p];
                for &(i, ri) in &children {
                    d = d.max(t.between[p][i] + ri);
                }
                reach[c] = reach[c].max(d);
                let e = &mut top2[c];
                if d > e.0 {
                    *e = (d, e.0);
                } else if d > e.1 {
                    e.1 = d;
                }
            }
        }
        // Paths whose highest point is a cut vertex joining two child blocks.
        for (a, b) in top2 {
            best = best.max(a + b);
        }
        Ok(SolveResult { measure: Measure::Lambda, value: best, witnesses: Vec::new(), exhausted: false, nodes })
    }
}

/// `λ(g)` through the block-cut tree; see [`BlockSolver`].
pub fn lambda_via_blocks(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    BlockSolver::new(budget).lambda(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::lambda_exact;
    use rand::{Rng, SeedableRng};

    fn b() -> Budget {
        Budget::default()
    }

    /// Tree diameter by two breadth-first passes.
    fn diameter(t: &Graph) -> usize {
        let far = |s: usize| {
            let mut dist = vec![usize::MAX; t.n()];
            dist[s] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in t.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            (0..t.n()).max_by_key(|&v| (dist[v], v)).map(|v| (v, dist[v])).unwrap()
        };
        far(far(0).0).1
    }

    fn random_connected(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
        let mut es: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(extra) {
                    es.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &es, std::iter::empty::<(String, usize)>()).unwrap()
    }

    #[test]
    fn trees_give_their_diameter() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.gen_range(1..40);
            let t = random_connected(&mut rng, n, 0.0);
            assert_eq!(lambda_via_blocks(&t, b()).unwrap().value, diameter(&t));
        }
    }

    #[test]
    fn matches_naive_solver() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..150 {
            let n = rng.gen_range(1..=12);
            let g = random_connected(&mut rng, n, 0.12);
            assert_eq!(lambda_via_blocks(&g, b()).unwrap().value, lambda_exact(&g, b()).unwrap().value, "{g:?}");
        }
    }

    #[test]
    fn disconnected_graphs_take_the_best_component() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let mut solver = BlockSolver::new(b());
        for _ in 0..60 {
            let n = rng.gen_range(2..=12);
            let g = random_connected(&mut rng, n, 0.15);
            for v in 0..n {
                let h = g.remove_vertex(v).0;
                assert_eq!(solver.lambda(&h).unwrap().value, lambda_exact(&h, b()).unwrap().value);
            }
        }
        assert!(solver.cached_blocks() > 0);
    }

    #[test]
    fn oversized_block_is_rejected() {
        let g = Graph::cycle(MAX_BLOCK_VERTICES + 1);
        assert!(matches!(lambda_via_blocks(&g, b()), Err(SolveError::BlockTooLarge { .. })));
    }
}
