//! Instance bundles: `graph.json` plus `manifest.json`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cnf::CnfFormula;
use crate::graph::{io, GraphError};

use super::{InstanceKind, Prediction, ReductionInstance};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub kind: InstanceKind,
    /// Where the formulas came from, in sequence order.
    pub formulas: Vec<String>,
    /// SHA-256 over the canonical DIMACS text of the sequence.
    pub formulas_sha256: String,
    pub split_index: usize,
    pub predicted: Prediction,
    pub certificates: BTreeMap<String, usize>,
    pub n: usize,
    pub m: usize,
}

/// Hex SHA-256 of `text`.
pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// SHA-256 of the formulas' canonical DIMACS forms, concatenated.
pub fn formulas_checksum(formulas: &[CnfFormula]) -> String {
    let mut h = Sha256::new();
    for f in formulas {
        h.update(f.to_dimacs().as_bytes());
    }
    hex::encode(h.finalize())
}

impl Manifest {
    pub fn new(inst: &ReductionInstance, sources: &[String]) -> Self {
        Self {
            kind: inst.kind,
            formulas: sources.to_vec(),
            formulas_sha256: formulas_checksum(inst.parity.formulas()),
            split_index: inst.parity.split_index(),
            predicted: inst.predicted.clone(),
            certificates: inst.certificates.clone(),
            n: inst.graph.n(),
            m: inst.graph.edge_count(),
        }
    }
}

/// Writes `graph.json` and `manifest.json` into `dir`, creating it.
pub fn write_bundle(dir: impl AsRef<Path>, inst: &ReductionInstance, sources: &[String]) -> Result<Manifest, GraphError> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    io::write_graph(&inst.graph, dir.join("graph.json"))?;
    let manifest = Manifest::new(inst, sources);
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    std::fs::write(dir.join("manifest.json"), text)?;
    Ok(manifest)
}
