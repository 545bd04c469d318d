use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::path::PathSet;

/// Version of the [`RunReport`] layout.
pub const SCHEMA_VERSION: u32 = 1;

/// The machine-readable result of one solver run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub algorithm: String,
    pub params: BTreeMap<String, String>,
    pub kappa: usize,
    pub paths: PathSet,
    /// Wall-clock time, or `None` when timing is suppressed.
    pub elapsed_ms: Option<f64>,
    /// Hex SHA-256 of the input file.
    pub input_digest: String,
}

impl RunReport {
    pub fn new(algorithm: &str, params: BTreeMap<String, String>, paths: PathSet, input_digest: String) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            algorithm: algorithm.to_string(),
            params,
            kappa: paths.len(),
            paths,
            elapsed_ms: None,
            input_digest,
        }
    }
}
