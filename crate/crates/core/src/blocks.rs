//! Biconnected components and the block-cut tree.

use serde::Serialize;

use crate::graph::{Graph, GraphError};

/// Block-cut tree of a connected graph.
///
/// `blocks[i]` is the sorted vertex set of block `i`; blocks are ordered by
/// their vertex lists. `tree[i]` lists the cut vertices contained in block
/// `i`, which is exactly the block-node adjacency of the bipartite tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub tree: Vec<Vec<usize>>,
}

impl BlockCutTree {
    /// Indices of the blocks containing cut vertex `c`.
    pub fn blocks_at(&self, c: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.tree[b].binary_search(&c).is_ok())
            .collect()
    }
}

pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let alive = vec![true; g.n()];
    let mut blocks = biconnected_components(g, &alive);
    blocks.sort();
    let mut count = vec![0usize; g.n()];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| count[v] > 1).collect();
    let tree = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| count[v] > 1).collect())
        .collect();
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        tree,
    })
}

/// Vertex sets of the blocks of `g[alive]`, each sorted. Isolated vertices
/// form singleton blocks; bridges form two-vertex blocks. Works on
/// disconnected graphs.
pub(crate) fn biconnected_components(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut vstack: Vec<usize> = Vec::new();
    // (vertex, next neighbor index)
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if !alive[root] || disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        if !g.neighbors(root).iter().any(|&w| alive[w]) {
            out.push(vec![root]);
            continue;
        }
        vstack.push(root);
        stack.push((root, 0));
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *next < nbrs.len() {
                let w = nbrs[*next];
                *next += 1;
                if !alive[w] {
                    continue;
                }
                if disc[w] == 0 {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    vstack.push(w);
                    stack.push((w, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    let mut block = vec![p];
                    loop {
                        let x = vstack.pop().expect("component vertex");
                        block.push(x);
                        if x == u {
                            break;
                        }
                    }
                    block.sort_unstable();
                    out.push(block);
                }
            }
        }
        vstack.clear();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_blocks_are_edges() {
        let t = block_cut_tree(&Graph::path(4)).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(t.cut_vertices, vec![1, 2]);
        assert_eq!(t.tree, vec![vec![1], vec![1, 2], vec![2]]);
        assert_eq!(t.blocks_at(1), vec![0, 1]);
    }

    #[test]
    fn cycle_is_one_block() {
        let t = block_cut_tree(&Graph::cycle(5)).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn single_vertex() {
        let t = block_cut_tree(&Graph::empty(1)).unwrap();
        assert_eq!(t.blocks, vec![vec![0]]);
    }

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)], std::iter::empty::<(String, usize)>())
            .unwrap();
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(t.cut_vertices, vec![2]);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(matches!(block_cut_tree(&Graph::empty(2)), Err(GraphError::Disconnected)));
    }

    #[test]
    fn components_of_a_forest_with_dead_vertex() {
        let g = Graph::path(5);
        let alive = [true, true, false, true, true];
        let mut blocks = biconnected_components(&g, &alive);
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1], vec![3, 4]]);
    }
}
