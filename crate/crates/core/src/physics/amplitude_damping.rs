use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::qmat::SquareMatrix;

use super::xlog2x;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeDampingParams {
    p: f64,
}

impl AmplitudeDampingParams {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Parameter {
                name: "p",
                value: p,
                reason: "damping probability must lie in [0, 1]",
            });
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// `K₀ = |0⟩⟨0| + √(1−p)|1⟩⟨1|`, `K₁ = √p |0⟩⟨1|`.
    pub fn channel(&self) -> KrausChannel {
        let p = self.p;
        let k0 = SquareMatrix::from_real_rows(2, &[1.0, 0.0, 0.0, (1.0 - p).sqrt()]).unwrap();
        let k1 = SquareMatrix::from_real_rows(2, &[0.0, p.sqrt(), 0.0, 0.0]).unwrap();
        KrausChannel::new(vec![k0, k1]).expect("amplitude damping is complete")
    }
}

pub fn ad_channel(p: f64) -> Result<KrausChannel> {
    Ok(AmplitudeDampingParams::new(p)?.channel())
}

/// Closed-form QI REC of amplitude damping,
/// `(p−1)/2 · log₂((1−p)/2) + (2−p)/2 · log₂((2−p)/2) + 1/2`, for `p ∈ [0, 1]`.
pub fn ad_coherence_closed_form(p: f64) -> f64 {
    -xlog2x((1.0 - p) / 2.0) + xlog2x((2.0 - p) / 2.0) + 0.5
}
