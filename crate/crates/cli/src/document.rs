//! JSON channel documents.
//!
//! ```json
//! {
//!   "name": "amplitude damping p=0.5",
//!   "dim": 2,
//!   "tolerance": 1e-10,
//!   "kraus": [
//!     [[[1, 0], [0, 0]], [[0, 0], [0.7071067811865476, 0]]],
//!     [[[0, 0], [0.7071067811865476, 0]], [[0, 0], [0, 0]]]
//!   ]
//! }
//! ```
//!
//! Each Kraus operator is a row-major `dim × dim` array of `[re, im]` pairs.
//! `name` and `tolerance` are optional.

use chancoh::{Complex64, KrausChannel, SquareMatrix, DEFAULT_TOL};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

impl ChannelDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_channel(channel: &KrausChannel, name: Option<String>) -> Self {
        let d = channel.dim();
        let kraus = channel
            .operators()
            .iter()
            .map(|k| {
                (0..d)
                    .map(|r| (0..d).map(|c| [k.get(r, c).re, k.get(r, c).im]).collect())
                    .collect()
            })
            .collect();
        Self {
            name,
            dim: d,
            tolerance: None,
            kraus,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Builds the channel. An explicit `tol_override` wins over the
    /// document's own tolerance, which wins over the library default.
    pub fn to_channel(&self, tol_override: Option<f64>) -> Result<KrausChannel, CliError> {
        let d = self.dim;
        if d == 0 {
            return Err(CliError::Parse("dim must be at least 1".into()));
        }
        let mut ops = Vec::with_capacity(self.kraus.len());
        for (i, op) in self.kraus.iter().enumerate() {
            if op.len() != d || op.iter().any(|row| row.len() != d) {
                return Err(CliError::Parse(format!(
                    "Kraus operator {i} is not a {d}x{d} matrix"
                )));
            }
            let entries: Vec<Complex64> = op
                .iter()
                .flatten()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect();
            ops.push(SquareMatrix::from_rows(d, &entries)?);
        }
        let tol = tol_override.or(self.tolerance).unwrap_or(DEFAULT_TOL);
        Ok(KrausChannel::with_tolerance(ops, tol)?)
    }
}
