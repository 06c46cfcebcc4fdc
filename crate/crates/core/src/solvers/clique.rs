//! Maximum cliques by Bron–Kerbosch with pivoting.

use super::{Measure, SolveResult};
use crate::graph::Graph;

type Set = Vec<u64>;

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn members(s: &Set) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

fn count(s: &Set) -> usize {
    s.iter().map(|w| w.count_ones() as usize).sum()
}

fn and(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

struct Bk<'a> {
    adj: &'a [Set],
    best: usize,
    found: Vec<Vec<usize>>,
    nodes: u64,
}

impl Bk<'_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: Set, mut x: Set) {
        self.nodes += 1;
        let pc = count(&p);
        if pc == 0 {
            if count(&x) == 0 {
                if r.len() > self.best {
                    self.best = r.len();
                    self.found.clear();
                }
                if r.len() == self.best {
                    let mut c = r.clone();
                    c.sort_unstable();
                    self.found.push(c);
                }
            }
            return;
        }
        if r.len() + pc < self.best {
            return;
        }
        let pivot = members(&p)
            .chain(members(&x))
            .max_by_key(|&u| count(&and(&p, &self.adj[u])))
            .expect("p is nonempty");
        let cands: Vec<usize> = members(&p).filter(|&v| self.adj[pivot][v / 64] >> (v % 64) & 1 == 0).collect();
        for v in cands {
            r.push(v);
            self.expand(r, and(&p, &self.adj[v]), and(&x, &self.adj[v]));
            r.pop();
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
    }
}

/// `ω(g)` with every maximum clique as a sorted vertex set. The empty
/// graph has `ω = 0` and the empty clique as its only witness.
pub fn omega_exact(g: &Graph) -> SolveResult {
    let n = g.n();
    let w = words(n);
    let adj: Vec<Set> = (0..n)
        .map(|v| {
            let mut s = vec![0u64; w];
            for &u in g.neighbors(v) {
                s[u / 64] |= 1 << (u % 64);
            }
            s
        })
        .collect();
    let mut p = vec![0u64; w];
    for v in 0..n {
        p[v / 64] |= 1 << (v % 64);
    }
    let mut bk = Bk { adj: &adj, best: 0, found: Vec::new(), nodes: 0 };
    bk.expand(&mut Vec::new(), p, vec![0u64; w]);
    let mut witnesses = bk.found;
    if witnesses.is_empty() {
        witnesses.push(Vec::new());
    }
    witnesses.sort();
    witnesses.dedup();
    SolveResult { measure: Measure::Omega, value: bk.best, witnesses, exhausted: true, nodes: bk.nodes }
}

/// `{v : ω(g - v) < ω(g)}`, the vertices lying in every maximum clique.
pub fn clique_singleton_transversal(g: &Graph) -> Vec<usize> {
    let omega = omega_exact(g).value;
    (0..g.n())
        .filter(|&v| omega_exact(&g.remove_vertex(v).0).value < omega)
        .collect()
}
