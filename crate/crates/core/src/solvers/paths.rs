//! Longest paths: value, full enumeration, Gallai vertices and lpt.

use super::bits::{adjacency, with_width, Bits};
use super::{check_size, transversal, vertex_sets, Budget, Measure, Meter, SolveError, SolveResult, TransversalResult};
use crate::graph::{Graph, GraphError};

/// Graphs up to this size are solved by the subset DP when the initial
/// branch-and-bound probe does not settle them.
pub const SUBSET_DP_MAX_VERTICES: usize = 24;

/// Node allowance of the branch-and-bound probe that precedes the subset DP.
const PROBE_NODES: u64 = 100_000;

/// Search state shared by the DFS kernels.
struct Kernel<'a, const W: usize> {
    adj: &'a [Bits<W>],
    meter: &'a Meter,
    visited: Bits<W>,
    disc: Vec<u32>,
    low: Vec<u32>,
    gval: Vec<u32>,
    frames: Vec<(usize, Bits<W>)>,
    vstack: Vec<usize>,
    path: Vec<usize>,
}

enum Halt {
    Budget,
    Done,
}

impl<'a, const W: usize> Kernel<'a, W> {
    fn new(adj: &'a [Bits<W>], meter: &'a Meter) -> Self {
        let n = adj.len();
        Self {
            adj,
            meter,
            visited: Bits::EMPTY,
            disc: vec![0; n],
            low: vec![0; n],
            gval: vec![0; n],
            frames: Vec::with_capacity(n),
            vstack: Vec::with_capacity(n),
            path: Vec::with_capacity(n),
        }
    }

    /// Vertices of `avail` reachable from `end` through `avail`.
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

    /// Upper bound on how many more edges a path ending at `end` can take
    /// through `avail`. If the reachable count alone is below `need` it is
    /// returned as is; otherwise the bound is refined over the blocks of
    /// the reachable part: from each vertex the path can descend through a
    /// chain of blocks only, using at most `|B| - 1` new vertices of each.
    fn bound(&mut self, end: usize, avail: &Bits<W>, need: usize) -> usize {
        let reach = self.reach(end, avail);
        let cheap = reach.len();
        if cheap < need || cheap <= 1 {
            return cheap;
        }
        let mut set = reach;
        set.insert(end);
        self.visited = Bits::EMPTY;
        self.visited.insert(end);
        self.disc[end] = 1;
        self.low[end] = 1;
        self.gval[end] = 0;
        let mut time = 1;
        self.frames.clear();
        self.vstack.clear();
        self.frames.push((end, self.adj[end].and(&set)));
        while let Some(top) = self.frames.last_mut() {
            let u = top.0;
            if let Some(w) = top.1.pop_first() {
                if self.visited.contains(w) {
                    self.low[u] = self.low[u].min(self.disc[w]);
                } else {
                    self.visited.insert(w);
                    time += 1;
                    self.disc[w] = time;
                    self.low[w] = time;
                    self.gval[w] = 0;
                    self.vstack.push(w);
                    self.frames.push((w, self.adj[w].and(&set)));
                }
                continue;
            }
            self.frames.pop();
            if let Some(&(p, _)) = self.frames.last() {
                self.low[p] = self.low[p].min(self.low[u]);
                if self.low[u] >= self.disc[p] {
                    let mut cnt = 0;
                    let mut deepest = 0;
                    loop {
                        let x = self.vstack.pop().expect("block vertex");
                        cnt += 1;
                        deepest = deepest.max(self.gval[x]);
                        if x == u {
                            break;
                        }
                    }
                    self.gval[p] = self.gval[p].max(cnt + deepest);
                }
            }
        }
        self.gval[end] as usize
    }

    /// Neighbors of `u` in `avail`, fewest onward options first.
    fn ordered_moves(&self, u: usize, avail: &Bits<W>) -> Vec<usize> {
        let mut moves: Vec<(usize, usize)> = self.adj[u]
            .and(avail)
            .iter()
            .map(|w| (self.adj[w].and(avail).len(), w))
            .collect();
        moves.sort_unstable();
        moves.into_iter().map(|(_, w)| w).collect()
    }

    /// Longest-path DFS; improves `best` and stops once `stop_at` is reached.
    fn maximize(&mut self, u: usize, avail: Bits<W>, best: &mut Best) -> Result<(), Halt> {
        if !self.meter.tick() {
            return Err(Halt::Budget);
        }
        let len = self.path.len() - 1;
        if len > best.len.map_or(0, |b| b) || best.len.is_none() {
            best.len = Some(len);
            best.path.clone_from(&self.path);
            if len >= best.stop_at {
                return Err(Halt::Done);
            }
        }
        let have = best.len.unwrap_or(0);
        if self.bound(u, &avail, have + 1 - len) + len <= have {
            return Ok(());
        }
        for w in self.ordered_moves(u, &avail) {
            let mut rest = avail;
            rest.remove(w);
            self.path.push(w);
            let r = self.maximize(w, rest, best);
            self.path.pop();
            r?;
        }
        Ok(())
    }

    /// Collects every path of exactly `target` edges, smaller endpoint first.
    fn collect(&mut self, u: usize, avail: Bits<W>, target: usize, out: &mut Vec<Vec<usize>>) -> Result<(), Halt> {
        if !self.meter.tick() {
            return Err(Halt::Budget);
        }
        let len = self.path.len() - 1;
        if len == target {
            if self.path[0] <= u {
                out.push(self.path.clone());
            }
            return Ok(());
        }
        if self.bound(u, &avail, target - len) + len < target {
            return Ok(());
        }
        for w in self.adj[u].and(&avail).iter() {
            let mut rest = avail;
            rest.remove(w);
            self.path.push(w);
            let r = self.collect(w, rest, target, out);
            self.path.pop();
            r?;
        }
        Ok(())
    }
}

impl<const W: usize> Kernel<'_, W> {
    /// Longest paths from `path[0]`: `from` over all ends, `to[i]` over
    /// paths ending at `cuts[i]`.
    fn sweep(&mut self, u: usize, avail: Bits<W>, cuts: &[usize], from: &mut usize, to: &mut [usize]) -> Result<(), Halt> {
        if !self.meter.tick() {
            return Err(Halt::Budget);
        }
        let len = self.path.len() - 1;
        *from = (*from).max(len);
        if let Some(i) = cuts.iter().position(|&c| c == u) {
            to[i] = to[i].max(len);
        }
        let mut thr = *from;
        for (i, &c) in cuts.iter().enumerate() {
            if avail.contains(c) {
                thr = thr.min(to[i]);
            }
        }
        if self.bound(u, &avail, (thr + 1).saturating_sub(len)) + len <= thr {
            return Ok(());
        }
        for w in self.adj[u].and(&avail).iter() {
            let mut rest = avail;
            rest.remove(w);
            self.path.push(w);
            let r = self.sweep(w, rest, cuts, from, to);
            self.path.pop();
            r?;
        }
        Ok(())
    }
}

fn sweep_all<const W: usize>(g: &Graph, start: usize, cuts: &[usize], meter: &Meter) -> Result<(usize, Vec<usize>), ()> {
    let adj = adjacency::<W>(g);
    let mut k = Kernel::new(&adj, meter);
    let mut avail = Bits::<W>::full(g.n());
    avail.remove(start);
    k.path.push(start);
    let mut from = 0;
    let mut to = vec![0; cuts.len()];
    match k.sweep(start, avail, cuts, &mut from, &mut to) {
        Ok(()) => Ok((from, to)),
        Err(_) => Err(()),
    }
}

/// Longest path from `start` anywhere, and to each vertex of `cuts`
/// (0 where unreachable or equal to `start`).
pub(crate) fn longest_from(g: &Graph, start: usize, cuts: &[usize], meter: &Meter) -> Result<(usize, Vec<usize>), SolveError> {
    check_size(g.n())?;
    with_width!(g.n(), sweep_all(g, start, cuts, meter)).map_err(|()| meter.exceeded(None))
}

struct Best {
    len: Option<usize>,
    path: Vec<usize>,
    stop_at: usize,
}

fn canonical_path(mut p: Vec<usize>) -> Vec<usize> {
    if p.last() < p.first() {
        p.reverse();
    }
    p
}

fn largest_component(g: &Graph) -> usize {
    g.components().iter().map(Vec::len).max().unwrap_or(0)
}

fn starts_by_degree(g: &Graph) -> Vec<usize> {
    let mut s: Vec<usize> = (0..g.n()).collect();
    s.sort_by_key(|&v| (g.degree(v), v));
    s
}

/// Branch and bound over all start vertices. `floor` is a known lower
/// bound (the search only looks for longer paths), `stop_at` an upper
/// bound at which the search may stop.
fn branch_and_bound<const W: usize>(
    g: &Graph,
    meter: &Meter,
    floor: Option<usize>,
    stop_at: usize,
) -> Result<Option<(usize, Vec<usize>)>, Option<usize>> {
    let adj = adjacency::<W>(g);
    let mut k = Kernel::new(&adj, meter);
    let mut best = Best { len: floor, path: Vec::new(), stop_at };
    let all = Bits::<W>::full(g.n());
    for s in starts_by_degree(g) {
        let mut avail = all;
        avail.remove(s);
        k.path.clear();
        k.path.push(s);
        match k.maximize(s, avail, &mut best) {
            Ok(()) => {}
            Err(Halt::Done) => break,
            Err(Halt::Budget) => return Err(best.len),
        }
    }
    Ok(if best.path.is_empty() { None } else { Some((best.len.unwrap_or(0), best.path)) })
}

/// Longest path by subset DP: `ends[S]` is the set of vertices at which
/// a path with vertex set exactly `S` can end.
fn subset_dp(g: &Graph, meter: &Meter) -> Result<(usize, Vec<usize>), Option<usize>> {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = (0usize, 1usize, 0usize);
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize - 1;
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !meter.tick() {
                return Err(Some(best.0));
            }
            if size > best.0 {
                best = (size, mask, v);
            }
            let mut ext = adj[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let (len, mut mask, mut v) = best;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        mask ^= 1 << v;
        let prev = (ends[mask] & adj[v]).trailing_zeros() as usize;
        path.push(prev);
        v = prev;
    }
    Ok((len, canonical_path(path)))
}

/// `λ(g)` with one longest path as witness.
///
/// A short branch-and-bound probe runs first (it settles dense and
/// Hamiltonian graphs at once); graphs with at most
/// [`SUBSET_DP_MAX_VERTICES`] vertices then fall back to the subset DP,
/// larger ones continue the branch and bound.
pub fn lambda_exact(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    check_size(g.n())?;
    let meter = Meter::new(budget);
    let stop_at = largest_component(g) - 1;
    let (value, path) = if g.n() <= SUBSET_DP_MAX_VERTICES {
        let probe = Meter::new(Budget::new(PROBE_NODES.min(budget.node_limit())));
        match with_width!(g.n(), branch_and_bound(g, &probe, None, stop_at)) {
            Ok(found) => found.expect("nonempty graph has a path"),
            Err(_) => subset_dp(g, &meter).map_err(|best| meter.exceeded(best))?,
        }
    } else {
        with_width!(g.n(), branch_and_bound(g, &meter, None, stop_at))
            .map_err(|best| meter.exceeded(best))?
            .expect("nonempty graph has a path")
    };
    Ok(SolveResult {
        measure: Measure::Lambda,
        value,
        witnesses: vec![canonical_path(path)],
        exhausted: false,
        nodes: meter.used(),
    })
}

/// Whether `g` has a path with at least `len` edges; returns one if so.
pub(crate) fn path_of_length(g: &Graph, len: usize, budget: Budget) -> Result<Option<Vec<usize>>, SolveError> {
    check_size(g.n())?;
    if len == 0 {
        return Ok(Some(vec![0]));
    }
    if largest_component(g) <= len {
        return Ok(None);
    }
    let meter = Meter::new(budget);
    let found = with_width!(g.n(), branch_and_bound(g, &meter, Some(len - 1), len)).map_err(|best| {
        meter.exceeded(best)
    })?;
    Ok(found.map(|(_, p)| canonical_path(p)))
}

fn collect_all<const W: usize>(g: &Graph, target: usize, meter: &Meter) -> Result<Vec<Vec<usize>>, SolveError> {
    let adj = adjacency::<W>(g);
    let mut k = Kernel::new(&adj, meter);
    let all = Bits::<W>::full(g.n());
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut avail = all;
        avail.remove(s);
        k.path.clear();
        k.path.push(s);
        if let Err(Halt::Budget) = k.collect(s, avail, target, &mut out) {
            return Err(meter.exceeded(Some(target)));
        }
    }
    out.sort();
    Ok(out)
}

/// All longest paths of `g`, each once up to reversal, sorted.
pub fn enumerate_longest_paths(g: &Graph, budget: Budget) -> Result<SolveResult, SolveError> {
    check_size(g.n())?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let lam = lambda_exact(g, budget)?;
    let meter = Meter::new(budget);
    let witnesses = with_width!(g.n(), collect_all(g, lam.value, &meter))?;
    Ok(SolveResult {
        measure: Measure::Lambda,
        value: lam.value,
        witnesses,
        exhausted: true,
        nodes: lam.nodes + meter.used(),
    })
}

/// `{v : λ(g - v) < λ(g)}`, sorted.
///
/// Only vertices on one longest path can qualify; for each of them a
/// decision search asks whether `g - v` still has a path of length `λ(g)`.
pub fn gallai_vertices(g: &Graph, budget: Budget) -> Result<Vec<usize>, SolveError> {
    check_size(g.n())?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let lam = lambda_exact(g, budget)?;
    let mut candidates = lam.witnesses[0].clone();
    candidates.sort_unstable();
    let mut out = Vec::new();
    for v in candidates {
        if g.n() == 1 {
            out.push(v);
            continue;
        }
        let (h, _) = g.remove_vertex(v);
        if path_of_length(&h, lam.value, budget)?.is_none() {
            out.push(v);
        }
    }
    Ok(out)
}

/// Minimum longest path transversal, checked against the full family of
/// longest paths.
pub fn lpt_exact(g: &Graph, budget: Budget) -> Result<TransversalResult, SolveError> {
    let paths = enumerate_longest_paths(g, budget)?;
    transversal(vertex_sets(&paths.witnesses), &Meter::new(budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn lam(g: &Graph) -> usize {
        lambda_exact(g, b()).unwrap().value
    }

    /// Longest path by trying every vertex sequence.
    fn brute_paths(g: &Graph) -> Vec<Vec<usize>> {
        fn grow(g: &Graph, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(p.clone());
            let u = *p.last().unwrap();
            for &w in g.neighbors(u) {
                if !p.contains(&w) {
                    p.push(w);
                    grow(g, p, out);
                    p.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.n() {
            grow(g, &mut vec![s], &mut out);
        }
        out
    }

    fn brute_lambda(g: &Graph) -> usize {
        brute_paths(g).iter().map(|p| p.len() - 1).max().unwrap()
    }

    fn brute_longest(g: &Graph) -> Vec<Vec<usize>> {
        let all = brute_paths(g);
        let l = all.iter().map(Vec::len).max().unwrap();
        let mut v: Vec<_> = all.into_iter().filter(|p| p.len() == l && p[0] <= *p.last().unwrap()).collect();
        v.sort();
        v
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..=n * 2).prop_map(move |es| {
                let es: Vec<_> = es.into_iter().filter(|(a, b)| a != b).collect();
                Graph::from_edge_list(n, &es, std::iter::empty::<(String, usize)>()).unwrap()
            })
        })
    }

    fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
        arb_graph(max_n).prop_map(|g| {
            let comps = g.components();
            let extra: Vec<_> = comps.windows(2).map(|w| (w[0][0], w[1][0])).collect();
            g.with_edges(&extra).unwrap()
        })
    }

    #[test]
    fn small_values() {
        assert_eq!(lam(&Graph::path(5)), 4);
        assert_eq!(lam(&Graph::empty(1)), 0);
        assert_eq!(lam(&Graph::complete(6)), 5);
        assert_eq!(lam(&Graph::petersen()), 9);
        assert_eq!(lam(&Graph::empty(3)), 0);
    }

    #[test]
    fn large_graphs_use_branch_and_bound() {
        assert_eq!(lam(&Graph::path(40)), 39);
        assert_eq!(lam(&Graph::cycle(70)), 69);
        let two = crate::graph::disjoint_union(&Graph::path(30), &Graph::cycle(5), "c").unwrap().0;
        assert_eq!(lam(&two), 29);
    }

    #[test]
    fn dp_handles_graphs_the_probe_cannot() {
        // Many pendant triangles: no Hamiltonian path, so the probe cannot
        // stop early.
        let mut es = Vec::new();
        for i in 0..7 {
            let c = 3 * i;
            es.extend([(c, c + 1), (c + 1, c + 2), (c, c + 2)]);
            if i > 0 {
                es.push((c - 3, c));
            }
        }
        let g = Graph::from_edge_list(21, &es, std::iter::empty::<(String, usize)>()).unwrap();
        let r = lambda_exact(&g, b()).unwrap();
        assert_eq!(r.value, brute_lambda(&g));
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::petersen();
        let e = lambda_exact(&g, Budget::new(3)).unwrap_err();
        assert!(matches!(e, SolveError::BudgetExceeded { limit: 3, .. }));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_longest_paths(&Graph::path(3), b()).unwrap().witnesses, vec![vec![0, 1, 2]]);
        let c4 = enumerate_longest_paths(&Graph::cycle(4), b()).unwrap();
        assert_eq!(c4.value, 3);
        assert_eq!(c4.witnesses, brute_longest(&Graph::cycle(4)));
        assert_eq!(c4.witnesses.len(), 4);
        let k1 = enumerate_longest_paths(&Graph::empty(1), b()).unwrap();
        assert_eq!(k1.witnesses, vec![vec![0]]);
    }

    #[test]
    fn gallai_examples() {
        assert_eq!(gallai_vertices(&Graph::path(3), b()).unwrap(), vec![0, 1, 2]);
        assert_eq!(gallai_vertices(&Graph::cycle(5), b()).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(gallai_vertices(&Graph::empty(1), b()).unwrap(), vec![0]);
        assert!(gallai_vertices(&Graph::empty(2), b()).is_err());
    }

    #[test]
    fn lpt_examples() {
        assert_eq!(lpt_exact(&Graph::path(5), b()).unwrap().size, 1);
        assert_eq!(lpt_exact(&Graph::cycle(5), b()).unwrap().size, 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn lambda_matches_sequence_enumeration(g in arb_graph(9)) {
            prop_assert_eq!(lam(&g), brute_lambda(&g));
        }

        #[test]
        fn witness_is_a_longest_path(g in arb_graph(10)) {
            let r = lambda_exact(&g, b()).unwrap();
            let p = &r.witnesses[0];
            prop_assert_eq!(p.len(), r.value + 1);
            prop_assert!(p.windows(2).all(|e| g.has_edge(e[0], e[1])));
            let mut s = p.clone();
            s.sort_unstable();
            s.dedup();
            prop_assert_eq!(s.len(), p.len());
        }

        #[test]
        fn enumeration_matches_sequence_enumeration(g in arb_connected(8)) {
            prop_assert_eq!(enumerate_longest_paths(&g, b()).unwrap().witnesses, brute_longest(&g));
        }

        #[test]
        fn gallai_iff_on_every_longest_path(g in arb_connected(9)) {
            let fam = enumerate_longest_paths(&g, b()).unwrap().witnesses;
            let expect: Vec<usize> = (0..g.n()).filter(|v| fam.iter().all(|p| p.contains(v))).collect();
            prop_assert_eq!(gallai_vertices(&g, b()).unwrap(), expect);
        }

        #[test]
        fn deletion_never_lengthens(g in arb_connected(9)) {
            let l = lam(&g);
            for v in 0..g.n() {
                if g.n() > 1 {
                    prop_assert!(lam(&g.remove_vertex(v).0) <= l);
                }
            }
        }

        #[test]
        fn lpt_witness_hits_all(g in arb_connected(8)) {
            let t = lpt_exact(&g, b()).unwrap();
            prop_assert!(t.certificate.iter().all(|s| s.iter().any(|x| t.witness.contains(x))));
            prop_assert_eq!(t.size == 1, !gallai_vertices(&g, b()).unwrap().is_empty());
        }
    }

    #[test]
    fn subset_dp_agrees_with_branch_and_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(2..=16);
            let mut es = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.2) {
                        es.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &es, std::iter::empty::<(String, usize)>()).unwrap();
            let meter = Meter::new(b());
            let dp = subset_dp(&g, &meter).unwrap().0;
            let bb = branch_and_bound::<1>(&g, &meter, None, n).ok().unwrap().unwrap().0;
            assert_eq!(dp, bb);
        }
    }
}
