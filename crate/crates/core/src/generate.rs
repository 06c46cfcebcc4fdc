//! Seeded random graphs and formulas for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::CnfFormula;
use crate::graph::Graph;

/// The generator every suite uses, so runs are reproducible from a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random spanning tree on `n` vertices plus each other pair with
/// probability `p`. Connected for `n ≥ 1`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges, std::iter::empty::<(String, usize)>()).expect("generated edges are valid")
}

/// `num_clauses` clauses of three literals drawn uniformly over
/// `num_vars ≥ 1` variables.
pub fn random_formula(rng: &mut impl Rng, num_vars: usize, num_clauses: usize) -> CnfFormula {
    assert!(num_vars >= 1);
    let mut lit = || {
        let v = rng.gen_range(1..=num_vars) as i32;
        if rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    };
    let clauses = (0..num_clauses).map(|_| [lit(), lit(), lit()]).collect();
    CnfFormula::new(num_vars, clauses).expect("generated literals are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_are_connected_and_reproducible() {
        let mut a = rng(9);
        let mut b = rng(9);
        for n in 1..30 {
            let g = random_connected_graph(&mut a, n, 0.1);
            assert!(g.is_connected());
            assert_eq!(g, random_connected_graph(&mut b, n, 0.1));
        }
    }

    #[test]
    fn formulas_respect_bounds() {
        let mut r = rng(3);
        for _ in 0..50 {
            let f = random_formula(&mut r, 3, 2);
            assert_eq!(f.clauses().len(), 2);
            assert!(f.clauses().iter().flatten().all(|l| (1..=3).contains(&l.unsigned_abs())));
        }
    }
}
