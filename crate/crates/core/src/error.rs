//! Error types shared across the toolkit.

use serde::{Deserialize, Serialize};

/// A reproducible witness for a failed check: the degree pair that broke a
/// bound or a lemma, optionally with the concrete edge set that realizes it.
///
/// Serialized as `{"n": .., "k": .., "alpha": [..], "beta": [..], "edges": [[i,j],..]}`
/// with 0-based vertex indices in `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub k: usize,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
}

impl Counterexample {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("counterexample serializes")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("k={k} out of range for n={n}")]
    KOutOfRange { n: usize, k: usize },

    #[error("delta={0} outside the required range")]
    DeltaOutOfRange(f64),

    #[error("invalid coherent model: {}", violations.join("; "))]
    InvalidModel { violations: Vec<String> },

    #[error("degree bound violated: {}", counterexample.to_json())]
    BoundViolation { counterexample: Counterexample },

    #[error("no lemma witness exists: {}", counterexample.to_json())]
    LemmaCounterexample { counterexample: Counterexample },

    #[error("equality census mismatch: {}", counterexample.to_json())]
    CensusMismatch { counterexample: Counterexample },

    #[error("label sampling gave up after {attempts} attempts (label {label} kept leaving the count window)")]
    ResampleCapExceeded { label: usize, attempts: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("model JSON: {0}")]
    ModelJson(#[from] serde_json::Error),
}

impl Error {
    /// The counterexample payload, when this error carries one.
    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Error::BoundViolation { counterexample }
            | Error::LemmaCounterexample { counterexample }
            | Error::CensusMismatch { counterexample } => Some(counterexample),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
