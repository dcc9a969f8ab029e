//! JSON form of a [`WeightModule`].
//!
//! ```json
//! {"schema": 1, "dim": 2, "basis_labels": ["v0", "v1"],
//!  "matrices": {"E": [["0", "1"], ["0", "0"]], "F": ..., "K": ..., ...},
//!  "weights": [{"lambda": "q", "alpha": "1", "beta": "1"}, ...]}
//! ```
//!
//! Entries are scalars in the shared grammar. The inverse matrices may be
//! omitted, in which case they are computed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::RatFunc;
use crate::linalg::Matrix;
use crate::pbw::Generator;
use crate::rep::{Weight, WeightModule};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    schema: u32,
    dim: usize,
    basis_labels: Vec<String>,
    matrices: BTreeMap<String, Vec<Vec<RatFunc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Weight>>,
}

fn rows(m: &Matrix) -> Vec<Vec<RatFunc>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Serialize a module to a JSON value.
pub fn module_to_value(m: &WeightModule) -> serde_json::Value {
    let matrices = Generator::ALL.iter().map(|&x| (x.name().to_string(), rows(m.matrix(x)))).collect();
    let doc = ModuleJson {
        schema: SCHEMA_VERSION,
        dim: m.dim(),
        basis_labels: m.labels().to_vec(),
        matrices,
        weights: m.weights().map(<[Weight]>::to_vec),
    };
    serde_json::to_value(doc).expect("module serializes")
}

/// Serialize a module to pretty-printed JSON.
pub fn module_to_json(m: &WeightModule) -> String {
    serde_json::to_string_pretty(&module_to_value(m)).expect("module serializes")
}

/// Parse a module from JSON.
pub fn module_from_json(text: &str) -> Result<WeightModule, Error> {
    let doc: ModuleJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    if doc.schema != SCHEMA_VERSION {
        return Err(Error::Malformed(format!("unsupported schema version {}", doc.schema)));
    }
    if doc.basis_labels.len() != doc.dim {
        return Err(Error::DimensionMismatch { expected: doc.dim, found: doc.basis_labels.len() });
    }
    if let Some(unknown) = doc.matrices.keys().find(|k| Generator::from_name(k).is_none()) {
        return Err(Error::Malformed(format!("unknown generator `{unknown}` in matrices")));
    }
    let get = |x: Generator| -> Result<Option<Matrix>, Error> {
        let Some(r) = doc.matrices.get(x.name()) else { return Ok(None) };
        if r.len() != doc.dim || r.iter().any(|row| row.len() != doc.dim) {
            return Err(Error::Malformed(format!("matrix of {x} is not {0}×{0}", doc.dim)));
        }
        Ok(Some(Matrix::from_rows(r.clone())))
    };
    let required = |x: Generator| get(x)?.ok_or_else(|| Error::Malformed(format!("missing matrix for {x}")));
    let (e, f, k, g, h) = (required(Generator::E)?, required(Generator::F)?, required(Generator::K)?, required(Generator::G)?, required(Generator::H)?);
    let inverses = [get(Generator::KInv)?, get(Generator::GInv)?, get(Generator::HInv)?];
    if let [Some(ki), Some(gi), Some(hi)] = inverses {
        WeightModule::from_action(doc.basis_labels, [e, f, k, ki, g, gi, h, hi], doc.weights)
    } else {
        WeightModule::new(doc.basis_labels, e, f, k, g, h, doc.weights)
    }
}
