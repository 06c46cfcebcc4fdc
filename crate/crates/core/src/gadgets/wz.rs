//! The Walther–Zamfirescu graph and its pendant-path variants.

use crate::graph::{append_path, io, Graph, GraphError};

/// Edge list of the graph with one pendant edge at each of `T`, `L`, `R`.
pub const WZ_GOLDEN: &str = include_str!("../../data/wz.txt");

/// SHA-256 of [`WZ_GOLDEN`].
pub const WZ_GOLDEN_SHA256: &str = "9f524cf216b9c771c1f8d2ac7f2d115a4c4ef475e6691f94440869d5190d0464";

/// Number of vertices of the core (the graph without pendant edges).
pub const WZ_CORE_VERTICES: usize = 9;

/// The shipped graph: 12 vertices, `λ = 9`, no Gallai vertex, `lpt = 2`.
/// Roles `T`, `L`, `R` mark the attachment vertices and `v_T`, `v_L`,
/// `v_R` the tips of the pendant edges.
pub fn build_wz() -> Graph {
    io::from_edge_list(WZ_GOLDEN).expect("embedded graph parses")
}

/// The 9-vertex core: Petersen graph minus one vertex, with roles `T`,
/// `L`, `R` on the three vertices of degree 2.
pub fn build_wz_core() -> Graph {
    let g = build_wz();
    let keep: Vec<bool> = (0..g.n()).map(|v| v < WZ_CORE_VERTICES).collect();
    let (core, _) = g.induced(&keep);
    core
}

/// The core with pendant paths of lengths `kt`, `kl`, `kr` at `T`, `L`,
/// `R`; tips are labeled `v_T`, `v_L`, `v_R`.
pub fn build_wz_paths(kt: usize, kl: usize, kr: usize) -> Result<Graph, GraphError> {
    let mut g = build_wz_core();
    for (role, k) in [("T", kt), ("L", kl), ("R", kr)] {
        let at = g.role(role).expect("core carries T, L, R");
        let (h, tip) = append_path(&g, at, k)?;
        g = h.with_role(format!("v_{role}"), tip)?;
    }
    Ok(g)
}
